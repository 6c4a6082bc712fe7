#include "mo/polynomial.hpp"

#include <algorithm>

#include "mo/error.hpp"

namespace mo {

Rat UniPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int nvars, Rat c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

int MultiPoly::total_degree() const {
  int deg = 0;
  for (const auto& [exp, coeff] : terms_) {
    int d = 0;
    for (int e : exp) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Rat& coeff) {
  if (static_cast<int>(exponents.size()) != nvars_)
    raise(Errc::var_mismatch, "exponent vector length != nvars");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    raise(Errc::var_mismatch, "evaluation point length != nvars");
  Rat acc(0);
  for (const auto& [exp, coeff] : terms_) {
    Rat term = coeff;
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < exp[v]; ++e) term *= point[v];
    acc += term;
  }
  return acc;
}

Rat MultiPoly::evaluate_at_integers(const std::vector<long long>& point) const {
  std::vector<Rat> q;
  q.reserve(point.size());
  for (long long x : point) q.emplace_back(make_rat(x));
  return evaluate(q);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) raise(Errc::var_mismatch, "adding polynomials of different nvars");
  MultiPoly out = a;
  for (const auto& [exp, coeff] : b.terms_) out.add_term(exp, coeff);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) raise(Errc::var_mismatch, "multiplying polynomials of different nvars");
  MultiPoly out(a.nvars_);
  std::vector<int> exp(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.nvars_; ++v) exp[v] = ea[v] + eb[v];
      out.add_term(exp, ca * cb);
    }
  return out;
}

MultiPoly embed(const UniPoly& u, int var, int nvars) {
  if (var < 0 || var >= nvars) raise(Errc::var_mismatch, "embed: variable index out of range");
  MultiPoly out(nvars);
  std::vector<int> exp(nvars, 0);
  for (int d = 0; d <= u.degree(); ++d) {
    exp[var] = d;
    out.add_term(exp, u.coeff(d));
  }
  return out;
}

UniPoly interpolate(const std::vector<std::pair<Int, Rat>>& points) {
  if (points.empty()) raise(Errc::invalid_argument, "interpolate: no points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        raise(Errc::duplicate_node, "interpolate: repeated x value");
  UniPoly acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPoly basis = UniPoly::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly({Rat(-points[j].first), Rat(1)});
      denom *= Rat(points[i].first - points[j].first);
    }
    acc = acc + basis * UniPoly::constant(points[i].second / denom);
  }
  return acc;
}

UniPoly specialize_dilation(const MultiPoly& f, const std::vector<long long>& c) {
  if (static_cast<int>(c.size()) != f.nvars())
    raise(Errc::var_mismatch, "dilation vector length != nvars");
  for (long long v : c)
    if (v < 0) raise(Errc::negative_dilation, "dilation vector must be nonnegative");
  std::vector<Rat> coeffs;
  for (const auto& [exp, coeff] : f.terms()) {
    int d = 0;
    Rat scale = coeff;
    for (std::size_t v = 0; v < c.size(); ++v) {
      d += exp[v];
      for (int e = 0; e < exp[v]; ++e) scale *= make_rat(c[v]);
    }
    if (scale == 0) continue;
    if (static_cast<int>(coeffs.size()) <= d) coeffs.resize(d + 1, Rat(0));
    coeffs[d] += scale;
  }
  return UniPoly(std::move(coeffs));
}

NonnegativityReport coefficient_nonnegative(const UniPoly& p) {
  NonnegativityReport report;
  for (int d = 0; d <= p.degree(); ++d)
    if (p.coeff(d) < 0) {
      report.nonnegative = false;
      report.offenders.push_back({{d}, p.coeff(d)});
    }
  return report;
}

NonnegativityReport coefficient_nonnegative(const MultiPoly& p) {
  NonnegativityReport report;
  for (const auto& [exp, coeff] : p.terms())
    if (coeff < 0) {
      report.nonnegative = false;
      report.offenders.push_back({exp, coeff});
    }
  return report;
}

namespace {

// Shared term renderer: monomial text is "" for the constant term.
std::string render_terms(const std::vector<std::pair<std::string, Rat>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms) {
    Rat a = abs(coeff);
    bool negative = coeff < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += rat_to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += rat_to_string(a) + "*" + mono;
    }
  }
  return out;
}

std::string power(const std::string& var, int e) {
  return e == 1 ? var : var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const UniPoly& p, const std::string& var) {
  std::vector<std::pair<std::string, Rat>> terms;
  for (int d = p.degree(); d >= 0; --d)
    if (p.coeff(d) != 0) terms.push_back({d == 0 ? "" : power(var, d), p.coeff(d)});
  return render_terms(terms);
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& var_names) {
  if (static_cast<int>(var_names.size()) != p.nvars())
    raise(Errc::var_mismatch, "variable name list length != nvars");
  std::vector<std::pair<std::string, Rat>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string mono;
    for (int v = 0; v < p.nvars(); ++v)
      if (it->first[v] > 0) {
        if (!mono.empty()) mono += "*";
        mono += power(var_names[v], it->first[v]);
      }
    terms.push_back({mono, it->second});
  }
  return render_terms(terms);
}

std::string to_string(const MultiPoly& p, const std::string& var_prefix) {
  std::vector<std::string> names;
  for (int v = 1; v <= p.nvars(); ++v) names.push_back(var_prefix + std::to_string(v));
  return to_string(p, names);
}

}  // namespace mo
