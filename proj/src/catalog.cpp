#include "hsumset/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "catalog_internal.hpp"

namespace hsumset::catalog {

std::string_view to_string(HRegime r) {
  switch (r) {
    case HRegime::ExactlyThree: return "h=3";
    case HRegime::AtLeastThree: return "h>=3";
    case HRegime::AtLeastFour: return "h>=4";
    case HRegime::AtLeastFive: return "h>=5";
  }
  return "?";
}

namespace {

std::int64_t regime_min_h(HRegime r) {
  switch (r) {
    case HRegime::ExactlyThree:
    case HRegime::AtLeastThree: return 3;
    case HRegime::AtLeastFour: return 4;
    case HRegime::AtLeastFive: return 5;
  }
  return 3;
}

expr::Bindings bindings_for(const DeletionFamily& f, std::int64_t h, std::int64_t k, const Params& p) {
  expr::Bindings b;
  b.set('h', h);
  b.set('k', k);
  for (std::size_t i = 0; i < f.params.size() && i < p.size(); ++i) b.set(f.params[i], p[i]);
  return b;
}

void require_vars(const std::string& context, const std::string& vars, const std::string& allowed) {
  for (char c : vars) {
    if (allowed.find(c) == std::string::npos) {
      throw std::logic_error(context + ": unexpected variable '" + std::string(1, c) + "'");
    }
  }
}

void require_vars(const std::string& context, const expr::Condition& cond, const std::string& allowed) {
  for (auto& clause : cond.any_of) {
    for (auto& atom : clause.atoms) {
      require_vars(context, atom.lhs.variables(), allowed);
      require_vars(context, atom.rhs.variables(), allowed);
    }
  }
}

DeletionFamily build(const detail::FamilySpec& s) {
  DeletionFamily f;
  f.id = s.id;
  f.shape = s.shape;
  f.extension = s.extension;
  f.params = s.params;
  f.h_regime = s.regime;
  f.k_min_text = s.k_min;
  f.k_min = expr::Poly::parse(s.k_min);
  f.param_domain = expr::Condition::parse(s.domain);
  f.dual = s.dual;
  const std::string allowed = "hk" + s.params;
  require_vars(s.id + " k_min", f.k_min.variables(), "h");
  require_vars(s.id + " domain", f.param_domain, allowed);
  std::string_view rest = s.deleted;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    f.deleted.push_back(expr::Poly::parse(rest.substr(0, comma)));
    require_vars(s.id + " deleted", f.deleted.back().variables(), allowed);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (f.deleted.size() != static_cast<std::size_t>(s.extension + 1)) {
    throw std::logic_error(s.id + ": deletion count must be extension + 1");
  }
  for (auto& c : s.cases) {
    CaseFormula cf;
    cf.family = s.id;
    cf.label = c.label;
    cf.domain = expr::Condition::parse(c.when);
    cf.formula_text = c.formula;
    cf.formula = expr::Poly::parse(c.formula);
    cf.anchor = c.printed.empty() ? c.formula : c.printed;
    cf.erratum = c.note;
    require_vars(s.id + " case " + c.label, cf.domain, allowed);
    require_vars(s.id + " case " + c.label, cf.formula.variables(), allowed);
    f.cases.push_back(std::move(cf));
  }
  return f;
}

}  // namespace

bool DeletionFamily::admits_h(std::int64_t h) const noexcept {
  return h_regime == HRegime::ExactlyThree ? h == 3 : h >= regime_min_h(h_regime);
}

std::int64_t DeletionFamily::min_k(std::int64_t h) const {
  expr::Bindings b;
  b.set('h', h);
  return k_min.eval(b);
}

std::vector<std::int64_t> DeletionFamily::deleted_positions(std::int64_t k, const Params& p) const {
  auto b = bindings_for(*this, 0, k, p);
  std::vector<std::int64_t> out;
  for (auto& d : deleted) out.push_back(d.eval(b));
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<DeletionFamily>& families() {
  static const std::vector<DeletionFamily> all = [] {
    std::vector<DeletionFamily> v;
    for (auto& s : detail::family_specs()) v.push_back(build(s));
    return v;
  }();
  return all;
}

const DeletionFamily& family(std::string_view id) {
  for (auto& f : families()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(id) + "'");
}

std::string render_params(const DeletionFamily& f, const Params& p) {
  std::string out;
  for (std::size_t i = 0; i < f.params.size() && i < p.size(); ++i) {
    if (i) out += ',';
    out += f.params[i];
    out += '=';
    out += std::to_string(p[i]);
  }
  return out;
}

namespace {

void check_params(const DeletionFamily& f, std::int64_t h, std::int64_t k, const Params& p) {
  if (p.size() != f.params.size()) {
    throw std::invalid_argument(f.id + ": expected " + std::to_string(f.params.size()) + " parameter(s) (" +
                                f.params + ")");
  }
  if (!f.param_domain.holds(bindings_for(f, h, k, p))) {
    throw std::invalid_argument(f.id + ": parameters " + render_params(f, p) + " violate range '" +
                                f.param_domain.source + "' at k=" + std::to_string(k));
  }
  const auto del = f.deleted_positions(k, p);
  const std::int64_t top = k + f.extension;
  if (std::adjacent_find(del.begin(), del.end()) != del.end() || del.front() < 1 || del.back() > top - 1) {
    throw std::invalid_argument(f.id + ": deleted positions must be distinct and inside [1," + std::to_string(top - 1) +
                                "]");
  }
}

}  // namespace

void check_admissible(const DeletionFamily& f, std::int64_t h, std::int64_t k, const Params& p) {
  if (!f.admits_h(h)) {
    throw std::invalid_argument(f.id + ": h=" + std::to_string(h) + " outside regime " + std::string(to_string(f.h_regime)));
  }
  if (k < f.min_k(h)) {
    throw std::invalid_argument(f.id + ": k=" + std::to_string(k) + " below threshold k >= " + f.k_min_text + " = " +
                                std::to_string(f.min_k(h)));
  }
  check_params(f, h, k, p);
}

IntSet instantiate(const DeletionFamily& f, std::int64_t k, const Params& p) {
  const auto h_floor = regime_min_h(f.h_regime);
  if (k < f.min_k(h_floor)) {
    throw std::invalid_argument(f.id + ": k=" + std::to_string(k) + " below threshold k >= " + f.k_min_text);
  }
  check_params(f, h_floor, k, p);
  return IntSet::interval(0, k + f.extension).without(f.deleted_positions(k, p));
}

std::string Prediction::label() const {
  std::string out;
  for (auto& m : matched) {
    if (!out.empty()) out += '+';
    out += m.label;
  }
  return out;
}

Prediction predicted_cardinality(const DeletionFamily& f, std::int64_t h, std::int64_t k, const Params& p) {
  check_admissible(f, h, k, p);
  const auto b = bindings_for(f, h, k, p);
  Prediction pred;
  for (auto& c : f.cases) {
    if (c.domain.holds(b)) pred.matched.push_back({c.label, c.formula.eval(b)});
  }
  if (pred.matched.empty()) {
    pred.status = PredictionStatus::Uncovered;
    std::int64_t best = -1;
    for (auto& c : f.cases) {
      const auto v = c.domain.violation(b);
      if (best < 0 || v < best) {
        best = v;
        pred.nearest.clear();
      }
      if (v == best) pred.nearest.push_back(c.label);
    }
    return pred;
  }
  const auto first = pred.matched.front().value;
  const bool agree = std::all_of(pred.matched.begin(), pred.matched.end(),
                                 [&](const CaseHit& m) { return m.value == first; });
  pred.status = agree ? PredictionStatus::Covered : PredictionStatus::Ambiguous;
  pred.value = first;
  return pred;
}

std::vector<Params> enumerate_params(const DeletionFamily& f, std::int64_t h, std::int64_t k) {
  std::vector<Params> out;
  const std::size_t n = f.params.size();
  const std::int64_t hi = k + f.extension - 1;
  if (hi < 1) return out;
  Params p(n, 1);
  while (true) {
    if (f.param_domain.holds(bindings_for(f, h, k, p))) {
      const auto del = f.deleted_positions(k, p);
      if (std::adjacent_find(del.begin(), del.end()) == del.end() && del.front() >= 1 && del.back() <= hi) {
        out.push_back(p);
      }
    }
    std::size_t i = n;
    while (i > 0 && p[i - 1] == hi) p[--i] = 1;
    if (i == 0) break;
    ++p[i - 1];
  }
  return out;
}

CoverageReport crosscheck(const DeletionFamily& f, std::int64_t h, std::int64_t k, const EngineLimits& limits) {
  CoverageReport rep;
  rep.family = f.id;
  rep.h = h;
  rep.k = k;
  for (auto& p : enumerate_params(f, h, k)) {
    ++rep.tuples;
    const auto actual = static_cast<std::int64_t>(
        restricted_cardinality(instantiate(f, k, p), static_cast<std::size_t>(h), limits));
    const auto pred = predicted_cardinality(f, h, k, p);
    switch (pred.status) {
      case PredictionStatus::Covered:
        ++rep.covered;
        if (pred.value != actual) rep.mismatches.push_back({p, pred.label(), pred.value, actual});
        break;
      case PredictionStatus::Uncovered: {
        Finding fnd{p, actual, {}};
        for (auto& l : pred.nearest) fnd.cases.push_back({l, 0});
        rep.uncovered.push_back(std::move(fnd));
        break;
      }
      case PredictionStatus::Ambiguous:
        rep.ambiguous.push_back({p, actual, pred.matched});
        break;
    }
  }
  return rep;
}

std::optional<Params> reflect_params(const DeletionFamily& from, const DeletionFamily& to, std::int64_t k,
                                     const Params& p) {
  if (from.extension != to.extension) return std::nullopt;
  auto del = from.deleted_positions(k, p);
  for (auto& d : del) d = k + from.extension - d;
  std::sort(del.begin(), del.end());
  for (auto& q : enumerate_params(to, regime_min_h(to.h_regime), k)) {
    if (to.deleted_positions(k, q) == del) return q;
  }
  return std::nullopt;
}

}  // namespace hsumset::catalog
