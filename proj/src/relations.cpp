#include "ybr/relations.hpp"

#include <algorithm>

namespace ybr {

namespace {

std::string subst(std::string s, int i, int j) {
  for (auto [key, v] : {std::pair{std::string("{i}"), i}, std::pair{std::string("{j}"), j}}) {
    for (std::size_t p; (p = s.find(key)) != std::string::npos;) s.replace(p, key.size(), std::to_string(v));
  }
  return s;
}

Relation make(const std::string& family, const std::string& lhs, const std::string& rhs, int m, int i, int j,
              bool corrected = false) {
  Relation r;
  r.family = family;
  std::string l = subst(lhs, i, j), rr = subst(rhs, i, j);
  r.text = l + " = " + rr;
  r.lhs = AlgElem::parse(l, m);
  r.rhs = AlgElem::parse(rr, m);
  r.corrected = corrected;
  return r;
}

const char* kDelta = "(I*(q^2+1)/(q^2-1))";

}  // namespace

std::vector<Relation> r_squared_relations(int m) {
  std::vector<Relation> out;
  for (int i = 1; i < m; ++i) out.push_back(make("R2", "r{i} r{i}", std::string("1 - (1/") + kDelta + ") h{i}", m, i, 0));
  return out;
}

Relation yang_baxter_relation() {
  std::string orbit1 = "h1 r2 - r2 h1 + I r1";
  std::string orbit2 = "(-I) h2 r1 - r2 + I r1 h2";
  // i/delta^2 (orbit1) - 1/delta^2 (orbit2) + i (-i r1 r2 r1)
  std::string rhs = "(I*(q^2-1)^2/(-(q^2+1)^2)) (" + orbit1 + ") - ((q^2-1)^2/(-(q^2+1)^2)) (" + orbit2 + ") + I ((-I) r1 r2 r1)";
  return make("YB", "r2 r1 r2", rhs, 3, 0, 0);
}

std::vector<Relation> local_relations(int m, bool corrected) {
  std::vector<Relation> out;
  auto each = [&](auto f) {
    for (int i = 1; i < m; ++i) f(i);
  };
  auto near = [&](auto f) {
    for (int i = 1; i < m; ++i)
      for (int j : {i + 1, i - 1})
        if (j >= 1 && j < m) f(i, j);
  };
  each([&](int i) { out.push_back(make("L1", "a{i} - a{i}^-1", "q - q^-1", m, i, 0)); });
  for (auto& r : far_commutation_relations(m))
    if (r.family == "L2") out.push_back(r);
  each([&](int i) {
    if (i + 1 < m) out.push_back(make("L3", "a{i} a{j} a{i}", "a{j} a{i} a{j}", m, i, i + 1));
  });
  each([&](int i) { out.push_back(make("L4", "h{i} h{i}", std::string(kDelta) + " h{i}", m, i, 0)); });
  for (auto& r : far_commutation_relations(m))
    if (r.family == "L5") out.push_back(r);
  near([&](int i, int j) { out.push_back(make("L6", "h{i} h{j} h{i}", "h{i}", m, i, j)); });
  each([&](int i) {
    out.push_back(make("L7", "a{i} h{i}", "q h{i}", m, i, 0));
    out.push_back(make("L7", "h{i} a{i}", "q h{i}", m, i, 0));
  });
  for (auto& r : far_commutation_relations(m))
    if (r.family == "L8") out.push_back(r);
  each([&](int i) {
    if (i + 1 >= m) return;
    out.push_back(make("L9", "a{i} a{j} h{i}", "I h{j} h{i}", m, i, i + 1));
    out.push_back(make("L9", "h{j} a{i} a{j}", "I h{j} h{i}", m, i, i + 1));
    if (!corrected) {
      out.push_back(make("L10", "h{i} a{j} a{i}", "-I h{i} h{j}", m, i, i + 1));
      out.push_back(make("L10", "a{j} a{i} h{j}", "-I h{i} h{j}", m, i, i + 1));
    } else {
      out.push_back(make("L10", "h{i} a{j}^-1 a{i}^-1", "-I h{i} h{j}", m, i, i + 1, true));
      out.push_back(make("L10", "a{j}^-1 a{i}^-1 h{j}", "-I h{i} h{j}", m, i, i + 1, true));
    }
  });
  near([&](int i, int j) {
    if (!corrected) {
      out.push_back(make("L11", "a{i} h{j} a{j}^-1", "a{j}^-1 h{i} a{j}", m, i, j));
      out.push_back(make("L12", "h{i} h{j} a{i}", "h{i} a{j}^-1", m, i, j));
      out.push_back(make("L13", "a{i} h{j} h{i}", "a{j} h{i}", m, i, j));
    } else if (j == i + 1) {
      out.push_back(make("L11", "a{j} h{i} a{j}^-1", "a{i}^-1 h{j} a{i}", m, i, j, true));
      out.push_back(make("L12", "h{i} h{j} a{i}", "I h{i} a{j}^-1", m, i, j, true));
      out.push_back(make("L13", "a{i}^-1 h{j} h{i}", "-I a{j} h{i}", m, i, j, true));
    } else {
      out.push_back(make("L11", "a{i} h{j} a{i}^-1", "a{j}^-1 h{i} a{j}", m, i, j, true));
      out.push_back(make("L12", "h{i} h{j} a{i}^-1", "-I h{i} a{j}", m, i, j, true));
      out.push_back(make("L13", "a{i} h{j} h{i}", "I a{j}^-1 h{i}", m, i, j, true));
    }
  });
  near([&](int i, int j) { out.push_back(make("L14", "h{i} a{j} h{i}", "I q^-1 h{i}", m, i, j)); });
  return out;
}

std::vector<Relation> far_commutation_relations(int m) {
  std::vector<Relation> out;
  for (int i = 1; i < m; ++i)
    for (int j = i + 2; j < m; ++j) {
      out.push_back(make("L2", "a{i} a{j}", "a{j} a{i}", m, i, j));
      out.push_back(make("L5", "h{i} h{j}", "h{j} h{i}", m, i, j));
      out.push_back(make("L8", "a{i} h{j}", "h{j} a{i}", m, i, j));
      out.push_back(make("L8", "a{j} h{i}", "h{i} a{j}", m, i, j));
    }
  return out;
}

std::string Witness::str() const {
  return word_str(left) + " (lhs) " + word_str(right) + " = (" + lhs_scalar.str() + ") " + word_str(target) + ", but " +
         word_str(left) + " (rhs) " + word_str(right) + " = (" + rhs_scalar.str() + ") " + word_str(target);
}

namespace {

std::vector<FieldElem> pairing(const AlgElem& x, const std::vector<Word>& probes) {
  std::vector<FieldElem> v;
  for (const auto& p : probes) v.push_back(word_trace(x * AlgElem::word(x.m(), reversed(p))));
  return v;
}

std::optional<FieldElem> ratio(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
  std::size_t k = 0;
  while (k < b.size() && b[k].is_zero()) ++k;
  if (k == b.size()) return std::nullopt;
  FieldElem c = a[k] / b[k];
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] != c * b[t]) return std::nullopt;
  return c;
}

}  // namespace

std::optional<Witness> inconsistency_witness(const Relation& r, const std::vector<Word>& probes) {
  int m = r.lhs.m();
  std::vector<Word> sides{{}};
  for (int i = 1; i < m; ++i) sides.push_back({{'h', i}});
  std::vector<Word> targets;
  for (int i = 1; i < m; ++i) targets.push_back({{'h', i}});
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j)
      if (std::abs(i - j) == 1) targets.push_back({{'h', i}, {'h', j}});
  for (const auto& s : sides)
    for (const auto& t : sides) {
      AlgElem S = AlgElem::word(m, s), T = AlgElem::word(m, t);
      auto vl = pairing(S * r.lhs * T, probes), vr = pairing(S * r.rhs * T, probes);
      for (const auto& w : targets) {
        auto vw = pairing(AlgElem::word(m, w), probes);
        auto cl = ratio(vl, vw), cr = ratio(vr, vw);
        if (cl && cr && *cl != *cr) return Witness{s, t, w, *cl, *cr};
      }
    }
  return std::nullopt;
}

std::vector<Word> sample_probes(const std::vector<Word>& all, std::size_t count, std::uint64_t seed) {
  if (count >= all.size()) return all;
  std::vector<Word> v = all;
  std::mt19937_64 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(count);
  return v;
}

}  // namespace ybr
