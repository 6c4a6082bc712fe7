#include "markedorder.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "mo/error.hpp"
#include "mo/families.hpp"
#include "mo/instance_gen.hpp"
#include "mo/json_io.hpp"
#include "mo/marked.hpp"
#include "mo/order_poly.hpp"
#include "mo/polynomial.hpp"
#include "mo/poset.hpp"

struct moc_poset {
  mo::Poset value;
};
struct moc_marked {
  mo::MarkedPoset value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int status_of(const mo::Error& e) {
  switch (e.code()) {
    case mo::Errc::parse:
      return MOC_ERR_PARSE;
    case mo::Errc::size_limit:
      return MOC_ERR_SIZE_LIMIT;
    default:
      return MOC_ERR_INVALID;
  }
}

template <typename F>
int guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const mo::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MOC_ERR_INVALID;
  }
}

std::uint64_t budget_or_default(uint64_t node_budget) {
  return node_budget == 0 ? mo::kDefaultNodeBudget : node_budget;
}

std::string marked_report_text(const mo::MarkedPoset& m) {
  if (!mo::in_order_cone(m))
    mo::raise(mo::Errc::outside_order_cone, "marking is outside the order cone");
  mo::NaturalLabeling l = mo::natural_labeling_for(m);
  mo::MultiPoly f = mo::product_formula_polynomial(m, l);
  std::ostringstream out;
  out << "labeling:";
  for (int a : l.order) out << " " << m.poset().label(a);
  out << "\nvalues:";
  for (long long v : mo::labeling_values(m, l)) out << " " << v;
  out << "\nregion:";
  for (std::size_t i = 0; i < l.order.size(); ++i)
    out << (i == 0 ? " " : " <= ") << "lambda(" << m.poset().label(l.order[i]) << ")";
  out << "\npolynomial: " << mo::to_string(f) << "\n";
  return out.str();
}

std::string offenders_text_of(const mo::NonnegativityReport& report) {
  std::ostringstream out;
  for (const auto& [exp, coeff] : report.offenders) {
    out << "monomial";
    for (int e : exp) out << " " << e;
    out << ": " << mo::rat_to_string(coeff) << "\n";
  }
  return out.str();
}

// Formula-vs-oracle equality on one marked poset; extra_label/extra lets the
// family path add the tableau count to the comparison.
bool check_one(std::ostream& report, const mo::MarkedPoset& m, std::uint64_t budget,
               const char* extra_label, const mo::Int* extra) {
  mo::Int counted = mo::count_bruteforce(m, budget);
  mo::Int formula = 0;
  if (mo::in_order_cone(m)) {
    mo::NaturalLabeling l = mo::natural_labeling_for(m);
    formula = mo::evaluate_marked(m, l, mo::product_formula_polynomial(m, l));
  }
  bool ok = counted == formula && (extra == nullptr || *extra == counted);
  report << "count=" << counted.get_str() << " formula=" << formula.get_str();
  if (extra) report << " " << extra_label << "=" << extra->get_str();
  report << (ok ? " ok" : " MISMATCH") << "\n";
  return ok;
}

}  // namespace

extern "C" {

const char* moc_version(void) { return "0.1.0"; }

const char* moc_last_error(void) { return g_last_error.c_str(); }

void moc_string_free(char* s) { std::free(s); }

int moc_poset_parse(const char* json, moc_poset** out) {
  return guarded([&] {
    if (!json || !out) mo::raise(mo::Errc::invalid_argument, "null argument");
    mo::Document doc = mo::read_document(json);
    *out = new moc_poset{mo::poset_from_document(doc)};
    return MOC_OK;
  });
}

void moc_poset_free(moc_poset* p) { delete p; }

int moc_marked_parse(const char* json, moc_marked** out) {
  return guarded([&] {
    if (!json || !out) mo::raise(mo::Errc::invalid_argument, "null argument");
    mo::Document doc = mo::read_document(json);
    *out = new moc_marked{mo::marked_from_document(doc)};
    return MOC_OK;
  });
}

void moc_marked_free(moc_marked* m) { delete m; }

int moc_poset_to_json(const moc_poset* p, char** out_json) {
  return guarded([&] {
    if (!p || !out_json) mo::raise(mo::Errc::invalid_argument, "null argument");
    *out_json = dup_string(mo::poset_to_json(p->value));
    return MOC_OK;
  });
}

int moc_marked_to_json(const moc_marked* m, char** out_json) {
  return guarded([&] {
    if (!m || !out_json) mo::raise(mo::Errc::invalid_argument, "null argument");
    *out_json = dup_string(mo::marked_to_json(m->value));
    return MOC_OK;
  });
}

int moc_order_polynomial(const moc_poset* p, char** out_text) {
  return guarded([&] {
    if (!p || !out_text) mo::raise(mo::Errc::invalid_argument, "null argument");
    *out_text = dup_string(mo::to_string(mo::omega(p->value)));
    return MOC_OK;
  });
}

int moc_marked_report(const moc_marked* m, char** out_text) {
  return guarded([&] {
    if (!m || !out_text) mo::raise(mo::Errc::invalid_argument, "null argument");
    *out_text = dup_string(marked_report_text(m->value));
    return MOC_OK;
  });
}

int moc_ehrhart_polynomial(const moc_marked* m, char** out_text) {
  return guarded([&] {
    if (!m || !out_text) mo::raise(mo::Errc::invalid_argument, "null argument");
    *out_text = dup_string(mo::to_string(mo::ehrhart_polynomial(m->value)));
    return MOC_OK;
  });
}

int moc_count(const moc_marked* m, uint64_t node_budget, char** out_decimal) {
  return guarded([&] {
    if (!m || !out_decimal) mo::raise(mo::Errc::invalid_argument, "null argument");
    *out_decimal = dup_string(mo::count_bruteforce(m->value, budget_or_default(node_budget)).get_str());
    return MOC_OK;
  });
}

int moc_positivity(const moc_marked* m, int* nonnegative, char** offenders_text) {
  return guarded([&] {
    if (!m || !nonnegative) mo::raise(mo::Errc::invalid_argument, "null argument");
    const mo::MarkedPoset& marked = m->value;
    if (!mo::in_order_cone(marked))
      mo::raise(mo::Errc::outside_order_cone, "marking is outside the order cone");
    mo::NaturalLabeling l = mo::natural_labeling_for(marked);
    mo::NonnegativityReport report =
        mo::coefficient_nonnegative(mo::product_formula_polynomial(marked, l));
    *nonnegative = report.nonnegative ? 1 : 0;
    if (offenders_text) *offenders_text = dup_string(offenders_text_of(report));
    return MOC_OK;
  });
}

int moc_oracle_check_doc(const char* json, uint64_t node_budget, char** out_report) {
  return guarded([&] {
    if (!json) mo::raise(mo::Errc::invalid_argument, "null argument");
    const std::uint64_t budget = budget_or_default(node_budget);
    mo::Document doc = mo::read_document(json);
    std::ostringstream report;
    bool ok;
    if (const auto* family = std::get_if<mo::FamilyInstance>(&doc)) {
      mo::MarkedPoset m = family->to_marked();
      mo::Int tableaux = 0;
      const char* label = "tableaux";
      bool has_tableaux = false;
      if (family->kind != mo::FamilyInstance::Kind::gt_flagged) {
        if (auto shape = mo::family_skew_shape(family->spec)) {
          tableaux = family->kind == mo::FamilyInstance::Kind::ps
                         ? mo::count_plane_partitions(*shape, family->spec.m + 1, budget)
                         : mo::count_ssyt(*shape, family->spec.m + 1, budget);
          has_tableaux = true;
        }
      }
      ok = check_one(report, m, budget, label, has_tableaux ? &tableaux : nullptr);
    } else {
      ok = check_one(report, mo::marked_from_document(doc), budget, nullptr, nullptr);
    }
    if (out_report) *out_report = dup_string(report.str());
    return ok ? MOC_OK : MOC_ERR_VERIFY;
  });
}

int moc_oracle_check_random(uint32_t trials, uint64_t seed, uint64_t node_budget,
                            uint32_t* failures, char** out_report) {
  return guarded([&] {
    const std::uint64_t budget = budget_or_default(node_budget);
    mo::Rng rng(seed);
    std::ostringstream report;
    uint32_t failed = 0;
    for (uint32_t t = 0; t < trials; ++t) {
      mo::MarkedPoset m = mo::random_marked_poset(rng, mo::RandomMarkedOptions{});
      report << "trial " << t << ": |P|=" << m.poset().size() << " |A|=" << m.marked().count()
             << " ";
      if (!check_one(report, m, budget, nullptr, nullptr)) ++failed;
    }
    report << "failures: " << failed << "/" << trials << "\n";
    if (failures) *failures = failed;
    if (out_report) *out_report = dup_string(report.str());
    return failed == 0 ? MOC_OK : MOC_ERR_VERIFY;
  });
}

int moc_gen_ps(int k, int m, const long long* y, const long long* z, char** out_json) {
  return guarded([&] {
    if (!y || !z || !out_json) mo::raise(mo::Errc::invalid_argument, "null argument");
    mo::FamilyInstance f;
    f.kind = mo::FamilyInstance::Kind::ps;
    f.spec = mo::GridSpec::create(k, m, std::vector<long long>(y, y + k),
                                  std::vector<long long>(z, z + k));
    *out_json = dup_string(mo::family_to_json(f));
    return MOC_OK;
  });
}

int moc_gen_gt(int k, int m, const long long* y, const long long* z, char** out_json) {
  return guarded([&] {
    if (!y || !z || !out_json) mo::raise(mo::Errc::invalid_argument, "null argument");
    mo::FamilyInstance f;
    f.kind = mo::FamilyInstance::Kind::gt;
    f.spec = mo::GridSpec::create(k, m, std::vector<long long>(y, y + k),
                                  std::vector<long long>(z, z + k));
    *out_json = dup_string(mo::family_to_json(f));
    return MOC_OK;
  });
}

int moc_gen_skew(const long long* lambda, size_t lambda_len, const long long* mu, size_t mu_len,
                 char** out_json) {
  return guarded([&] {
    if (!lambda || !out_json || (mu_len > 0 && !mu))
      mo::raise(mo::Errc::invalid_argument, "null argument");
    mo::SkewShape shape = mo::SkewShape::create(
        std::vector<long long>(lambda, lambda + lambda_len),
        std::vector<long long>(mu, mu + mu_len));
    *out_json = dup_string(mo::skew_to_json(shape));
    return MOC_OK;
  });
}

}  // extern "C"
