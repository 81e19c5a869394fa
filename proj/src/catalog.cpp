#include "vee/catalog.hpp"

#include <functional>

#include "vee/error.hpp"

namespace vee {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Published: return "published";
    case Provenance::Derived: return "derived";
    case Provenance::Trivial: return "trivial";
  }
  return "?";
}

namespace {

using Builder = std::function<CatalogEntry(const ParamMap&)>;

struct Definition {
  CatalogInfo info;
  Builder build;
};

RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Entry entry(RatVector v, const Rational& c, std::string label) { return {Covector{std::move(v)}, c, std::move(label)}; }

void require_nonzero(const ParamMap& p, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (p.at(n) == 0) throw VeeError(ErrorCode::InvalidParams, std::string("multiplicity '") + n + "' must be nonzero");
}

Expected value(const Rational& l2, Provenance prov, std::string note) {
  return {true, ExpectedLambda::Value, l2, prov, std::move(note)};
}

// A_n in simple-root coordinates: alpha_i + ... + alpha_j, one orbit.
CatalogEntry root_a(std::size_t n, const ParamMap& p) {
  require_nonzero(p, {"c"});
  const Rational& c = p.at("c");
  std::vector<Entry> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RatVector v(n);
      for (std::size_t k = i; k <= j; ++k) v[k] = 1;
      es.push_back(entry(std::move(v), c, "a" + std::to_string(i + 1) + std::to_string(j + 1)));
    }
  CatalogEntry e{"A" + std::to_string(n), "", VConfiguration::build(n, std::move(es)), std::nullopt};
  if (n == 1) {
    e.expected = Expected{true, ExpectedLambda::Unspecified, 0, Provenance::Trivial, "one dimension: the lambda condition is empty"};
  } else {
    Rational l2 = 4 * Rational(static_cast<long>((n + 1) * (n + 1))) * c;
    e.expected = value(l2, Provenance::Derived, "lambda^2 = 4 (n+1)^2 c");
  }
  return e;
}

// B_n: short e_i (cs), long e_i +- e_j (cl).
CatalogEntry root_b(std::size_t n, const ParamMap& p) {
  require_nonzero(p, {"cs", "cl"});
  const Rational& cs = p.at("cs");
  const Rational& cl = p.at("cl");
  std::vector<Entry> es;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector v(n);
    v[i] = 1;
    es.push_back(entry(std::move(v), cs, "e" + std::to_string(i + 1)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVector plus(n), minus(n);
      plus[i] = plus[j] = 1;
      minus[i] = 1;
      minus[j] = -1;
      es.push_back(entry(std::move(plus), cl, "e" + std::to_string(i + 1) + "+e" + std::to_string(j + 1)));
      es.push_back(entry(std::move(minus), cl, "e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1)));
    }
  CatalogEntry e{"B" + std::to_string(n), "", VConfiguration::build(n, std::move(es)), std::nullopt};
  const Rational nn(static_cast<long>(n));
  Rational num = cs + 2 * (nn - 1) * cl;
  Rational den = cl * (cs + 2 * (nn - 2) * cl);
  if (den != 0) {
    Provenance prov = n == 2 ? Provenance::Published : Provenance::Derived;
    e.expected = value(2 * num * num * num / den, prov, "lambda^2 = 2 (cs + 2(n-1) cl)^3 / (cl (cs + 2(n-2) cl))");
  }
  return e;
}

std::vector<Definition> definitions() {
  std::vector<Definition> d;

  d.push_back({{"A2", "three covectors a, b, a+b with multiplicities ca, cb, cg", {{"ca", 1}, {"cb", 1}, {"cg", 1}}},
               [](const ParamMap& p) {
                 require_nonzero(p, {"ca", "cb", "cg"});
                 const auto &ca = p.at("ca"), &cb = p.at("cb"), &cg = p.at("cg");
                 CatalogEntry e{"A2", "", VConfiguration::build(2, {entry(vec({1, 0}), ca, "a"), entry(vec({0, 1}), cb, "b"),
                                                                    entry(vec({1, 1}), cg, "a+b")}),
                                std::nullopt};
                 Rational sigma = ca * cb + ca * cg + cb * cg;
                 if (sigma == 0)
                   e.expected = Expected{true, ExpectedLambda::Unspecified, 0, Provenance::Published, "degenerate form"};
                 else
                   e.expected = value(4 * sigma * sigma / (ca * cb * cg), Provenance::Published,
                                      "lambda = 2 (ca cb + ca cg + cb cg) (ca cb cg)^(-1/2)");
                 return e;
               }});

  d.push_back({{"B2", "root system B2: e1, e2 (cs), e1+-e2 (cl)", {{"cs", 1}, {"cl", 1}}},
               [](const ParamMap& p) { return root_b(2, p); }});

  d.push_back({{"Prop3", "e1 (c1), e2 (c2), e1+e2 (cp), e1-e2 (cm); requires c1 = c2",
                {{"c1", 1}, {"c2", 1}, {"cp", 1}, {"cm", 1}}},
               [](const ParamMap& p) {
                 require_nonzero(p, {"c1", "c2", "cp", "cm"});
                 const auto &c1 = p.at("c1"), &c2 = p.at("c2"), &cp = p.at("cp"), &cm = p.at("cm");
                 if (c1 != c2) throw VeeError(ErrorCode::InvalidParams, "Prop3 requires c1 = c2");
                 CatalogEntry e{"Prop3", "",
                                VConfiguration::build(2, {entry(vec({1, 0}), c1, "e1"), entry(vec({0, 1}), c2, "e2"),
                                                          entry(vec({1, 1}), cp, "e1+e2"), entry(vec({1, -1}), cm, "e1-e2")}),
                                std::nullopt};
                 Rational delta = (c1 + 2 * cp) * (c1 + 2 * cm);
                 Rational den = c1 * (4 * cp * cm + c1 * (cp + cm));
                 if (den != 0)
                   e.expected = value(4 * delta * delta / den, Provenance::Published,
                                      "lambda = 2 Delta c1^(-1/2) (4 cp cm + c1 (cp + cm))^(-1/2)");
                 else
                   e.expected = Expected{true, ExpectedLambda::Unspecified, 0, Provenance::Published, "lambda infinite"};
                 return e;
               }});

  d.push_back({{"Prop4", "e1 (c1), 2e1 (ct1), e2 (c2), e1+-e2 (cp, cm); cp = cm, 2 ct1 c2 = cp (c1 - c2)",
                {{"c1", 3}, {"ct1", 1}, {"c2", 1}, {"cp", 1}, {"cm", 1}}},
               [](const ParamMap& p) {
                 require_nonzero(p, {"c1", "ct1", "c2", "cp", "cm"});
                 const auto &c1 = p.at("c1"), &ct1 = p.at("ct1"), &c2 = p.at("c2"), &cp = p.at("cp"), &cm = p.at("cm");
                 if (cp != cm) throw VeeError(ErrorCode::InvalidParams, "Prop4 requires cp = cm");
                 if (2 * ct1 * c2 != cp * (c1 - c2)) throw VeeError(ErrorCode::InvalidParams, "Prop4 requires 2 ct1 c2 = cp (c1 - c2)");
                 CatalogEntry e{"Prop4", "",
                                VConfiguration::build(2, {entry(vec({1, 0}), c1, "e1"), entry(vec({2, 0}), ct1, "2e1"),
                                                          entry(vec({0, 1}), c2, "e2"), entry(vec({1, 1}), cp, "e1+e2"),
                                                          entry(vec({1, -1}), cm, "e1-e2")}),
                                std::nullopt};
                 Rational delta = (c1 + 4 * ct1 + 2 * cp) * (c2 + 2 * cp);
                 Rational den = (c2 + 2 * cp) * (c1 + 4 * ct1) * cp;
                 if (den != 0)
                   e.expected = value(2 * delta * delta / den, Provenance::Published,
                                      "lambda = sqrt(2) Delta (c2 + 2cp)^(-1/2) (c1 + 4ct1)^(-1/2) cp^(-1/2)");
                 return e;
               }});

  d.push_back({{"Prop5",
                "e1, e2, 2e2, (e1+-e2)/2, (e1+-3e2)/2 on the family b=t, a=3t, ct2=s, c2=3t+2s, c1=t(3t-2s)/(3t+4s)",
                {{"t", 1}, {"s", 1}}},
               [](const ParamMap& p) {
                 const auto &t = p.at("t"), &s = p.at("s");
                 if (3 * t + 4 * s == 0) throw VeeError(ErrorCode::InvalidParams, "Prop5 family needs 3t + 4s != 0");
                 Rational c1 = t * (3 * t - 2 * s) / (3 * t + 4 * s);
                 Rational c2 = 3 * t + 2 * s;
                 Rational a = 3 * t;
                 const Rational& b = t;
                 const Rational& ct2 = s;
                 for (const Rational* c : std::initializer_list<const Rational*>{&c1, &c2, &a, &b, &ct2})
                   if (*c == 0) throw VeeError(ErrorCode::InvalidParams, "Prop5 family point has a zero multiplicity");
                 Rational h(1, 2);
                 CatalogEntry e{"Prop5", "",
                                VConfiguration::build(2, {entry(vec({1, 0}), c1, "e1"), entry(vec({0, 1}), c2, "e2"),
                                                          entry(vec({0, 2}), ct2, "2e2"), entry({h, h}, a, "(e1+e2)/2"),
                                                          entry({h, -h}, a, "(e1-e2)/2"), entry({h, 3 * h}, b, "(e1+3e2)/2"),
                                                          entry({h, -3 * h}, b, "(e1-3e2)/2")}),
                                std::nullopt};
                 e.expected = value(36 * c2 * c2 / (3 * t + 4 * s), Provenance::Derived, "lambda^2 = 36 (3t+2s)^2 / (3t+4s)");
                 return e;
               }});

  d.push_back({{"G2", "G2 positive roots: short (1,0),(1,1),(2,1) (cs), long (0,1),(3,1),(3,2) (cl)", {{"cs", 1}, {"cl", 1}}},
               [](const ParamMap& p) {
                 require_nonzero(p, {"cs", "cl"});
                 const auto &cs = p.at("cs"), &cl = p.at("cl");
                 CatalogEntry e{"G2", "",
                                VConfiguration::build(2, {entry(vec({1, 0}), cs, "a"), entry(vec({0, 1}), cl, "b"),
                                                          entry(vec({1, 1}), cs, "b+a"), entry(vec({2, 1}), cs, "b+2a"),
                                                          entry(vec({3, 1}), cl, "b+3a"), entry(vec({3, 2}), cl, "2b+3a")}),
                                std::nullopt};
                 if (cs + 9 * cl != 0)
                   e.expected = value(36 * (cs + 3 * cl) * (cs + 3 * cl) / (cs + 9 * cl), Provenance::Derived,
                                      "lambda^2 = 36 (cs + 3cl)^2 / (cs + 9cl)");
                 return e;
               }});

  // Multiplicities certified by find_multiplicities (c_short = 3 c_long).
  d.push_back({{"G2timesScaledA2", "G2 (short 3 cl, long cl) plus doubled short roots (2,0),(2,2),(4,2) (cd)", {{"cl", 1}, {"cd", 1}}},
               [](const ParamMap& p) {
                 require_nonzero(p, {"cl", "cd"});
                 const auto &cl = p.at("cl"), &cd = p.at("cd");
                 Rational cs = 3 * cl;
                 if (3 * cl + 4 * cd == 0) throw VeeError(ErrorCode::InvalidParams, "degenerate form: 3cl + 4cd = 0");
                 CatalogEntry e{"G2timesScaledA2", "",
                                VConfiguration::build(
                                    2, {entry(vec({1, 0}), cs, "a"), entry(vec({0, 1}), cl, "b"), entry(vec({1, 1}), cs, "b+a"),
                                        entry(vec({2, 1}), cs, "b+2a"), entry(vec({3, 1}), cl, "b+3a"),
                                        entry(vec({3, 2}), cl, "2b+3a"), entry(vec({2, 0}), cd, "2a"),
                                        entry(vec({2, 2}), cd, "2b+2a"), entry(vec({4, 2}), cd, "2b+4a")}),
                                std::nullopt};
                 e.expected = value(36 * (3 * cl + 2 * cd) * (3 * cl + 2 * cd) / (3 * cl + 4 * cd), Provenance::Derived,
                                    "lambda^2 = 36 (3cl + 2cd)^2 / (3cl + 4cd)");
                 return e;
               }});

  // Multiplicities certified by find_multiplicities.
  d.push_back({{"TenVector", "e1, 2e1, e2, 2e2, e1+-e2, e1+-2e2, 2e1+-e2 with multiplicities 12,3,12,3,8,8,2,2,2,2", {}},
               [](const ParamMap&) {
                 CatalogEntry e{"TenVector", "",
                                VConfiguration::build(
                                    2, {entry(vec({1, 0}), 12, "e1"), entry(vec({2, 0}), 3, "2e1"), entry(vec({0, 1}), 12, "e2"),
                                        entry(vec({0, 2}), 3, "2e2"), entry(vec({1, 1}), 8, "e1+e2"),
                                        entry(vec({1, -1}), 8, "e1-e2"), entry(vec({1, 2}), 2, "e1+2e2"),
                                        entry(vec({1, -2}), 2, "e1-2e2"), entry(vec({2, 1}), 2, "2e1+e2"),
                                        entry(vec({2, -1}), 2, "2e1-e2")}),
                                std::nullopt};
                 e.expected = value(450, Provenance::Derived, "solved exactly");
                 return e;
               }});

  d.push_back({{"OrthogonalPair", "two orthogonal covectors e1 (c1), e2 (c2): reducible, no lambda", {{"c1", 1}, {"c2", 1}}},
               [](const ParamMap& p) {
                 require_nonzero(p, {"c1", "c2"});
                 CatalogEntry e{"OrthogonalPair", "",
                                VConfiguration::build(2, {entry(vec({1, 0}), p.at("c1"), "e1"), entry(vec({0, 1}), p.at("c2"), "e2")}),
                                std::nullopt};
                 e.expected = Expected{true, ExpectedLambda::NoSolution, 0, Provenance::Published, "a pair of vectors defines no solution"};
                 return e;
               }});

  for (std::size_t n : {1, 3, 4})
    d.push_back({{"A" + std::to_string(n), "root system A" + std::to_string(n) + " in simple-root coordinates (c)", {{"c", 1}}},
                 [n](const ParamMap& p) { return root_a(n, p); }});
  for (std::size_t n : {3, 4})
    d.push_back({{"B" + std::to_string(n), "root system B" + std::to_string(n) + ": e_i (cs), e_i+-e_j (cl)", {{"cs", 1}, {"cl", 1}}},
                 [n](const ParamMap& p) { return root_b(n, p); }});
  return d;
}

const std::vector<Definition>& registry() {
  static const std::vector<Definition> defs = definitions();
  return defs;
}

}  // namespace

std::vector<CatalogInfo> catalog_list() {
  std::vector<CatalogInfo> out;
  for (const auto& d : registry()) out.push_back(d.info);
  return out;
}

CatalogEntry catalog_get(std::string_view name, const ParamMap& params) {
  for (const auto& d : registry()) {
    if (d.info.name != name) continue;
    ParamMap full;
    for (const auto& p : d.info.params) full[p.name] = p.default_value;
    for (const auto& [k, v] : params) {
      if (!full.count(k)) throw VeeError(ErrorCode::InvalidParams, "entry '" + std::string(name) + "' has no parameter '" + k + "'");
      full[k] = v;
    }
    CatalogEntry e = d.build(full);
    e.name = d.info.name;
    e.description = d.info.description;
    return e;
  }
  throw VeeError(ErrorCode::UnknownName, "no catalog entry named '" + std::string(name) + "'");
}

VConfiguration direct_sum(const VConfiguration& a, const VConfiguration& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Entry> es;
  for (const auto& e : a.entries()) {
    RatVector v = e.covector.coords;
    v.resize(n);
    es.push_back({Covector{std::move(v)}, e.mult, "L." + e.label});
  }
  for (const auto& e : b.entries()) {
    RatVector v(a.dim());
    v.insert(v.end(), e.covector.coords.begin(), e.covector.coords.end());
    es.push_back({Covector{std::move(v)}, e.mult, "R." + e.label});
  }
  return VConfiguration::build(n, std::move(es));
}

}  // namespace vee
