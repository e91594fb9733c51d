#include "cylo/frame.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cylo/filters.hpp"

namespace cylo {

Bitset perp_set(const CylindricOrthoFrame& X, const Bitset& u) {
  Bitset out = Bitset::full(X.n());
  u.for_each([&](int y) { out &= X.perp[y]; });
  return out;
}

Bitset biclosure(const CylindricOrthoFrame& X, const Bitset& u) {
  return perp_set(X, perp_set(X, u));
}

Bitset rel_image(const std::vector<Bitset>& rel, const Bitset& u) {
  Bitset out(rel.empty() ? u.universe() : rel[0].universe());
  u.for_each([&](int x) { out |= rel[x]; });
  return out;
}

namespace {

/// Closes a family under pairwise application of `op`, keeping canonical
/// order. Used for intersection closures of set families.
std::vector<Bitset> close_family(std::vector<Bitset> family,
                                 const std::function<Bitset(const Bitset&, const Bitset&)>& op,
                                 const Limits& lim, const char* what) {
  std::map<Bitset, int, BitsetLexLess> known;
  std::vector<Bitset> work = std::move(family);
  std::vector<Bitset> out;
  auto push = [&](Bitset v) {
    if (!known.emplace(v, 0).second) return;
    out.push_back(std::move(v));
    if (out.size() > lim.max_family)
      throw ResourceGuardError(std::string(what) + " family exceeds the size guard of " +
                                   std::to_string(lim.max_family) + " members",
                               lim.max_family);
  };
  for (auto& s : work) push(std::move(s));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k <= i; ++k) push(op(out[i], out[k]));
  std::sort(out.begin(), out.end(), Bitset::lex_less);
  return out;
}

}  // namespace

std::vector<Bitset> enumerate_bclosed(const CylindricOrthoFrame& X, const Limits& lim) {
  std::vector<Bitset> seed;
  seed.push_back(Bitset::full(X.n()));
  for (int x = 0; x < X.n(); ++x) seed.push_back(X.perp[x]);
  return close_family(
      std::move(seed), [](const Bitset& a, const Bitset& b) { return a & b; }, lim,
      "biorthogonally closed");
}

ValidationReport validate_frame(const CylindricOrthoFrame& X) {
  const int n = X.n();
  const int m = X.dims();
  ValidationReport rep(X.name.empty() ? "frame axioms" : X.name);
  auto pt = [&](int x) { return X.points[x]; };

  {
    int w = -1;
    for (int x = 0; x < n && w < 0; ++x)
      if (X.perp[x].test(x)) w = x;
    if (w < 0)
      rep.pass("perp.irreflexive");
    else
      rep.fail("perp.irreflexive", {pt(w)}, pt(w) + " ⊥ " + pt(w));
  }
  {
    bool found = false;
    for (int x = 0; x < n && !found; ++x)
      for (int y = 0; y < n && !found; ++y)
        if (X.perp[x].test(y) && !X.perp[y].test(x)) {
          rep.fail("perp.symmetric", {pt(x), pt(y)},
                   pt(x) + " ⊥ " + pt(y) + " but not " + pt(y) + " ⊥ " + pt(x));
          found = true;
        }
    if (!found) rep.pass("perp.symmetric");
  }

  for (int i = 0; i < m; ++i) {
    const auto& R = X.rels[i];
    std::string tag = "rel[" + std::to_string(i) + "]";
    {
      int w = -1;
      for (int x = 0; x < n && w < 0; ++x)
        if (!R[x].test(x)) w = x;
      if (w < 0)
        rep.pass(tag + ".reflexive");
      else
        rep.fail(tag + ".reflexive", {pt(w)}, "not " + pt(w) + " R " + pt(w));
    }
    {
      bool found = false;
      for (int x = 0; x < n && !found; ++x)
        for (int y = 0; y < n && !found; ++y) {
          if (!R[x].test(y)) continue;
          if (!R[y].subset_of(R[x])) {
            int z = R[y].minus(R[x]).find_first();
            rep.fail(tag + ".transitive", {pt(x), pt(y), pt(z)},
                     pt(x) + " R " + pt(y) + " R " + pt(z) + " but not " + pt(x) + " R " + pt(z));
            found = true;
          }
        }
      if (!found) rep.pass(tag + ".transitive");
    }
    {
      // R[R[{x}]^⊥] ⊆ R[{x}]^⊥; with reflexivity the two sides coincide.
      bool found = false;
      for (int x = 0; x < n && !found; ++x) {
        Bitset blocked = perp_set(X, R[x]);
        Bitset image = rel_image(R, blocked);
        if (!image.subset_of(blocked)) {
          int y = image.minus(blocked).find_first();
          rep.fail(tag + ".perp-stable", {pt(x), pt(y)},
                   pt(y) + " lies in R[R[{" + pt(x) + "}]^⊥] but not in R[{" + pt(x) + "}]^⊥");
          found = true;
        }
      }
      if (!found) rep.pass(tag + ".perp-stable");
    }
  }

  if (m > 1) {
    bool found = false;
    for (int i = 0; i < m && !found; ++i)
      for (int k = i + 1; k < m && !found; ++k)
        for (int x = 0; x < n && !found; ++x) {
          Bitset ik = rel_image(X.rels[k], X.rels[i][x]);
          Bitset ki = rel_image(X.rels[i], X.rels[k][x]);
          if (!(ik == ki)) {
            Bitset diff = ik.subset_of(ki) ? ki.minus(ik) : ik.minus(ki);
            int z = diff.find_first();
            rep.fail("rel.commute", {std::to_string(i), std::to_string(k), pt(x), pt(z)},
                     "the composites of R" + std::to_string(i) + " and R" + std::to_string(k) +
                         " differ from " + pt(x) + " at " + pt(z));
            found = true;
          }
        }
    if (!found) rep.pass("rel.commute");
  }

  if (m > 0) {
    {
      bool found = false;
      for (int i = 0; i < m && !found; ++i)
        for (int k = 0; k < m && !found; ++k) {
          const Bitset& d = X.deltas[i][k];
          if (!(biclosure(X, d) == d)) {
            rep.fail("delta.biclosed", {std::to_string(i), std::to_string(k)},
                     "Δ" + std::to_string(i) + std::to_string(k) +
                         " is not biorthogonally closed");
            found = true;
          }
        }
      if (!found) rep.pass("delta.biclosed");
    }
    {
      bool found = false;
      for (int i = 0; i < m && !found; ++i)
        for (int k = i + 1; k < m && !found; ++k)
          if (!(X.deltas[i][k] == X.deltas[k][i])) {
            rep.fail("delta.symmetric", {std::to_string(i), std::to_string(k)},
                     "Δ" + std::to_string(i) + std::to_string(k) + " ≠ Δ" + std::to_string(k) +
                         std::to_string(i));
            found = true;
          }
      if (!found) rep.pass("delta.symmetric");
    }
    {
      int w = -1;
      for (int i = 0; i < m && w < 0; ++i)
        if (!X.deltas[i][i].is_full()) w = i;
      if (w < 0)
        rep.pass("delta.identity");
      else
        rep.fail("delta.identity", {std::to_string(w)},
                 "Δ" + std::to_string(w) + std::to_string(w) + " is not the full point set");
    }
    {
      bool found = false;
      for (int i = 0; i < m && !found; ++i)
        for (int k = 0; k < m && !found; ++k) {
          if (k == i) continue;
          for (int l = 0; l < m && !found; ++l) {
            if (k == l) continue;
            Bitset lhs = rel_image(X.rels[k], X.deltas[i][k] & X.deltas[k][l]);
            if (!(lhs == X.deltas[i][l])) {
              rep.fail("delta.compose", {std::to_string(i), std::to_string(k), std::to_string(l)},
                       "R" + std::to_string(k) + "[Δ" + std::to_string(i) + std::to_string(k) +
                           " ∩ Δ" + std::to_string(k) + std::to_string(l) + "] ≠ Δ" +
                           std::to_string(i) + std::to_string(l));
              found = true;
            }
          }
        }
      if (!found) rep.pass("delta.compose");
    }
  }

  return rep;
}

std::string set_name(const std::vector<std::string>& point_names, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int x) {
    if (!first) out += ",";
    out += point_names[x];
    first = false;
  });
  out += "}";
  return out;
}

int SetAlgebra::index_of(const Bitset& s) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), s, Bitset::lex_less);
  if (it != sets.end() && *it == s) return static_cast<int>(it - sets.begin());
  return -1;
}

SetAlgebra bclosed_algebra(const CylindricOrthoFrame& X, const Limits& lim) {
  SetAlgebra B;
  B.sets = enumerate_bclosed(X, lim);
  B.point_names = X.points;
  if (B.sets.size() > lim.max_lattice)
    throw ResourceGuardError("B(X) with " + std::to_string(B.sets.size()) +
                                 " members exceeds the algebra size guard",
                             lim.max_lattice);

  std::vector<std::string> names;
  names.reserve(B.sets.size());
  for (const auto& s : B.sets) names.push_back(set_name(X.points, s));
  B.alg.lat = Lattice::from_inclusion(std::move(names), B.sets);
  B.alg.name = "B(" + (X.name.empty() ? std::string("X") : X.name) + ")";

  const int n = B.alg.size();
  auto lookup = [&](const Bitset& s, const char* what) {
    int id = B.index_of(s);
    if (id < 0)
      throw StructuralError(std::string(what) + " left the biorthogonally closed family at " +
                            set_name(X.points, s));
    return id;
  };

  B.alg.ocomp.resize(n);
  for (int a = 0; a < n; ++a) B.alg.ocomp[a] = lookup(perp_set(X, B.sets[a]), "orthocomplement");

  B.alg.exists.assign(X.dims(), std::vector<int>(n));
  for (int i = 0; i < X.dims(); ++i)
    for (int a = 0; a < n; ++a)
      B.alg.exists[i][a] = lookup(biclosure(X, rel_image(X.rels[i], B.sets[a])), "quantifier");

  B.alg.delta.assign(X.dims(), std::vector<int>(X.dims()));
  for (int i = 0; i < X.dims(); ++i)
    for (int k = 0; k < X.dims(); ++k)
      B.alg.delta[i][k] = lookup(X.deltas[i][k], "diagonal constant");

  return B;
}

CylindricOrthoFrame goldblatt_frame(const CylindricOrtholattice& A, const Limits& lim) {
  FilterSpectrum spec = enumerate_proper_filters(A.lat, lim);
  CylindricOrthoFrame X;
  X.name = "S(" + (A.name.empty() ? std::string("A") : A.name) + ")";
  X.points = spec.names;
  const int n = spec.size();

  // comp_members[f] = {a : a⊥ ∈ f}; x ⊥ y iff x meets comp_members[y].
  std::vector<Bitset> comp_members(n, Bitset(A.size()));
  for (int f = 0; f < n; ++f)
    spec.filters[f].for_each([&](int a) { comp_members[f].set(A.comp(a)); });

  X.perp.assign(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (spec.filters[x].intersects(comp_members[y])) X.perp[x].set(y);

  X.rels.assign(A.dims(), std::vector<Bitset>(n, Bitset(n)));
  for (int i = 0; i < A.dims(); ++i) {
    std::vector<Bitset> image(n, Bitset(A.size()));
    for (int x = 0; x < n; ++x)
      spec.filters[x].for_each([&](int a) { image[x].set(A.exists[i][a]); });
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (image[x].subset_of(spec.filters[y])) X.rels[i][x].set(y);
  }

  X.deltas.assign(A.dims(), std::vector<Bitset>(A.dims(), Bitset(n)));
  for (int i = 0; i < A.dims(); ++i)
    for (int k = 0; k < A.dims(); ++k)
      for (int x = 0; x < n; ++x)
        if (spec.filters[x].test(A.delta[i][k])) X.deltas[i][k].set(x);

  return X;
}

}  // namespace cylo
