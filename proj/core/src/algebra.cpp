#include "cylo/algebra.hpp"

namespace cylo {

namespace {

std::string nm(const Lattice& lat, int a) { return lat.name(a); }

void check_unary_table(const Lattice& lat, const std::vector<int>& table, const char* what) {
  if (static_cast<int>(table.size()) != lat.size())
    throw StructuralError(std::string(what) + " table is not total: " +
                          std::to_string(table.size()) + " entries for " +
                          std::to_string(lat.size()) + " elements");
  for (int v : table)
    if (v < 0 || v >= lat.size())
      throw StructuralError(std::string(what) + " table references an unknown element id");
}

}  // namespace

CylindricOrtholattice as_cylindric(std::string name, Ortholattice ol) {
  CylindricOrtholattice A;
  A.lat = std::move(ol.lat);
  A.ocomp = std::move(ol.ocomp);
  A.name = std::move(name);
  return A;
}

CylindricOrtholattice trivial_cylindric(std::string name, Ortholattice ol, int dims) {
  CylindricOrtholattice A = as_cylindric(std::move(name), std::move(ol));
  std::vector<int> id(A.size());
  for (int a = 0; a < A.size(); ++a) id[a] = a;
  A.exists.assign(dims, id);
  A.delta.assign(dims, std::vector<int>(dims, A.lat.top()));
  return A;
}

ValidationReport validate_ortholattice(const Ortholattice& A) {
  const Lattice& L = A.lat;
  const int n = L.size();
  check_unary_table(L, A.ocomp, "ocomp");
  ValidationReport rep("ortholattice axioms");

  {
    int w = -1;
    for (int a = 0; a < n && w < 0; ++a)
      if (!L.leq(a, a)) w = a;
    if (w < 0)
      rep.pass("order.reflexive");
    else
      rep.fail("order.reflexive", {nm(L, w)}, nm(L, w) + " is not below itself");
  }
  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b)
        if (a != b && L.leq(a, b) && L.leq(b, a)) {
          rep.fail("order.antisymmetric", {nm(L, a), nm(L, b)},
                   nm(L, a) + " and " + nm(L, b) + " are mutually comparable");
          found = true;
        }
    if (!found) rep.pass("order.antisymmetric");
  }
  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b) {
        if (!L.leq(a, b)) continue;
        if (!L.up(b).subset_of(L.up(a))) {
          int c = L.up(b).minus(L.up(a)).find_first();
          rep.fail("order.transitive", {nm(L, a), nm(L, b), nm(L, c)},
                   nm(L, a) + " ≤ " + nm(L, b) + " ≤ " + nm(L, c) + " but " + nm(L, a) + " ≰ " +
                       nm(L, c));
          found = true;
        }
      }
    if (!found) rep.pass("order.transitive");
  }
  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b) {
        int m = L.meet(a, b);
        Bitset lower = L.down(a) & L.down(b);
        if (!(lower.test(m) && lower.subset_of(L.down(m)))) {
          rep.fail("lattice.meet", {nm(L, a), nm(L, b)},
                   nm(L, m) + " is not the greatest lower bound of " + nm(L, a) + " and " +
                       nm(L, b));
          found = true;
        }
      }
    if (!found) rep.pass("lattice.meet");
  }
  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b) {
        int j = L.join(a, b);
        Bitset upper = L.up(a) & L.up(b);
        if (!(upper.test(j) && upper.subset_of(L.up(j)))) {
          rep.fail("lattice.join", {nm(L, a), nm(L, b)},
                   nm(L, j) + " is not the least upper bound of " + nm(L, a) + " and " + nm(L, b));
          found = true;
        }
      }
    if (!found) rep.pass("lattice.join");
  }
  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      if (!L.leq(L.bottom(), a) || !L.leq(a, L.top())) {
        rep.fail("lattice.bounds", {nm(L, a)},
                 nm(L, a) + " is not between " + nm(L, L.bottom()) + " and " + nm(L, L.top()));
        found = true;
      }
    if (!found) rep.pass("lattice.bounds");
  }

  {
    int w = -1;
    for (int a = 0; a < n && w < 0; ++a)
      if (L.meet(a, A.comp(a)) != L.bottom()) w = a;
    if (w < 0)
      rep.pass("ortho.meet-complement");
    else
      rep.fail("ortho.meet-complement", {nm(L, w)},
               nm(L, w) + " ∧ " + nm(L, A.comp(w)) + " = " + nm(L, L.meet(w, A.comp(w))) +
                   " ≠ " + nm(L, L.bottom()));
  }
  {
    int w = -1;
    for (int a = 0; a < n && w < 0; ++a)
      if (L.join(a, A.comp(a)) != L.top()) w = a;
    if (w < 0)
      rep.pass("ortho.join-complement");
    else
      rep.fail("ortho.join-complement", {nm(L, w)},
               nm(L, w) + " ∨ " + nm(L, A.comp(w)) + " = " + nm(L, L.join(w, A.comp(w))) +
                   " ≠ " + nm(L, L.top()));
  }
  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b)
        if (L.leq(a, b) && !L.leq(A.comp(b), A.comp(a))) {
          rep.fail("ortho.antitone", {nm(L, a), nm(L, b)},
                   nm(L, a) + " ≤ " + nm(L, b) + " but " + nm(L, A.comp(b)) + " ≰ " +
                       nm(L, A.comp(a)));
          found = true;
        }
    if (!found) rep.pass("ortho.antitone");
  }
  {
    int w = -1;
    for (int a = 0; a < n && w < 0; ++a)
      if (A.comp(A.comp(a)) != a) w = a;
    if (w < 0)
      rep.pass("ortho.involution");
    else
      rep.fail("ortho.involution", {nm(L, w)},
               nm(L, w) + "⊥⊥ = " + nm(L, A.comp(A.comp(w))) + " ≠ " + nm(L, w));
  }

  return rep;
}

DistributivityResult is_distributive(const Ortholattice& A) {
  const Lattice& L = A.lat;
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return {false, {a, b, c}};
  return {};
}

ValidationReport validate_quantifier(const Ortholattice& A, const std::vector<int>& E,
                                     const std::string& subject) {
  const Lattice& L = A.lat;
  const int n = L.size();
  check_unary_table(L, E, "exists");
  ValidationReport rep(subject);

  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b)
        if (E[L.join(a, b)] != L.join(E[a], E[b])) {
          rep.fail("join-additive", {nm(L, a), nm(L, b)},
                   "∃(" + nm(L, a) + " ∨ " + nm(L, b) + ") = " + nm(L, E[L.join(a, b)]) +
                       " but ∃" + nm(L, a) + " ∨ ∃" + nm(L, b) + " = " +
                       nm(L, L.join(E[a], E[b])));
          found = true;
        }
    if (!found) rep.pass("join-additive");
  }
  if (E[L.bottom()] == L.bottom())
    rep.pass("zero");
  else
    rep.fail("zero", {}, "∃" + nm(L, L.bottom()) + " = " + nm(L, E[L.bottom()]) + " ≠ " +
                             nm(L, L.bottom()));
  {
    int w = -1;
    for (int a = 0; a < n && w < 0; ++a)
      if (E[E[a]] != E[a]) w = a;
    if (w < 0)
      rep.pass("idempotent");
    else
      rep.fail("idempotent", {nm(L, w)},
               "∃∃" + nm(L, w) + " = " + nm(L, E[E[w]]) + " ≠ ∃" + nm(L, w) + " = " +
                   nm(L, E[w]));
  }
  {
    int w = -1;
    for (int a = 0; a < n && w < 0; ++a)
      if (!L.leq(a, E[a])) w = a;
    if (w < 0)
      rep.pass("increasing");
    else
      rep.fail("increasing", {nm(L, w)}, nm(L, w) + " ≰ ∃" + nm(L, w) + " = " + nm(L, E[w]));
  }
  {
    int w = -1;
    for (int a = 0; a < n && w < 0; ++a) {
      int c = A.comp(E[a]);
      if (E[c] != c) w = a;
    }
    if (w < 0)
      rep.pass("closed-complement");
    else {
      int c = A.comp(E[w]);
      rep.fail("closed-complement", {nm(L, w)},
               "∃((∃" + nm(L, w) + ")⊥) = ∃" + nm(L, c) + " = " + nm(L, E[c]) + " ≠ " +
                   nm(L, c));
    }
  }

  return rep;
}

Bitset closed_elements(const Ortholattice& A, const std::vector<int>& E) {
  const Lattice& L = A.lat;
  check_unary_table(L, E, "exists");
  Bitset fixed(L.size());
  for (int a = 0; a < L.size(); ++a)
    if (E[a] == a) fixed.set(a);

  if (!fixed.test(L.bottom()) || !fixed.test(L.top()))
    throw StructuralError("closed elements do not include the bounds; the quantifier is invalid");
  std::vector<int> members = fixed.members();
  for (int a : members) {
    if (!fixed.test(A.comp(a)))
      throw StructuralError("closed elements are not closed under ⊥ at " + nm(L, a) +
                            "; the quantifier is invalid");
    for (int b : members) {
      if (!fixed.test(L.meet(a, b)))
        throw StructuralError("closed elements are not closed under ∧ at (" + nm(L, a) + ", " +
                              nm(L, b) + "); the quantifier is invalid");
      if (!fixed.test(L.join(a, b)))
        throw StructuralError("closed elements are not closed under ∨ at (" + nm(L, a) + ", " +
                              nm(L, b) + "); the quantifier is invalid");
    }
  }
  return fixed;
}

ValidationReport validate_cylindric(const CylindricOrtholattice& A) {
  const Lattice& L = A.lat;
  const int n = L.size();
  const int m = A.dims();
  ValidationReport rep(A.name.empty() ? "cylindric axioms" : A.name);

  ValidationReport base = validate_ortholattice(A);
  for (const auto& c : base.checks()) rep.add(c);

  if (static_cast<int>(A.delta.size()) != m)
    throw StructuralError("delta matrix has " + std::to_string(A.delta.size()) + " rows for " +
                          std::to_string(m) + " dimensions");
  for (const auto& row : A.delta) {
    if (static_cast<int>(row.size()) != m)
      throw StructuralError("delta matrix is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw StructuralError("delta matrix references an unknown element id");
  }

  for (int i = 0; i < m; ++i) {
    ValidationReport q =
        validate_quantifier(A, A.exists[i], "quantifier in dimension " + std::to_string(i));
    rep.merge("exists[" + std::to_string(i) + "]", q);
  }

  {
    bool found = false;
    for (int i = 0; i < m && !found; ++i)
      for (int k = i + 1; k < m && !found; ++k)
        for (int a = 0; a < n && !found; ++a) {
          int ik = A.exists[i][A.exists[k][a]];
          int ki = A.exists[k][A.exists[i][a]];
          if (ik != ki) {
            rep.fail("exists.commute", {std::to_string(i), std::to_string(k), nm(L, a)},
                     "∃" + std::to_string(i) + "∃" + std::to_string(k) + " " + nm(L, a) + " = " +
                         nm(L, ik) + " but ∃" + std::to_string(k) + "∃" + std::to_string(i) + " " +
                         nm(L, a) + " = " + nm(L, ki));
            found = true;
          }
        }
    if (m > 1) {
      if (!found) rep.pass("exists.commute");
    }
  }

  if (m > 0) {
    {
      bool found = false;
      for (int i = 0; i < m && !found; ++i)
        for (int k = i + 1; k < m && !found; ++k)
          if (A.delta[i][k] != A.delta[k][i]) {
            rep.fail("delta.symmetric", {std::to_string(i), std::to_string(k)},
                     "δ" + std::to_string(i) + std::to_string(k) + " = " + nm(L, A.delta[i][k]) +
                         " but δ" + std::to_string(k) + std::to_string(i) + " = " +
                         nm(L, A.delta[k][i]));
            found = true;
          }
      if (!found) rep.pass("delta.symmetric");
    }
    {
      int w = -1;
      for (int i = 0; i < m && w < 0; ++i)
        if (A.delta[i][i] != L.top()) w = i;
      if (w < 0)
        rep.pass("delta.identity");
      else
        rep.fail("delta.identity", {std::to_string(w)},
                 "δ" + std::to_string(w) + std::to_string(w) + " = " + nm(L, A.delta[w][w]) +
                     " ≠ " + nm(L, L.top()));
    }
    {
      bool found = false;
      for (int i = 0; i < m && !found; ++i)
        for (int k = 0; k < m && !found; ++k) {
          if (k == i) continue;
          for (int l = 0; l < m && !found; ++l) {
            if (k == l) continue;
            int lhs = A.exists[k][L.meet(A.delta[i][k], A.delta[k][l])];
            if (lhs != A.delta[i][l]) {
              rep.fail("delta.compose",
                       {std::to_string(i), std::to_string(k), std::to_string(l)},
                       "∃" + std::to_string(k) + "(δ" + std::to_string(i) + std::to_string(k) +
                           " ∧ δ" + std::to_string(k) + std::to_string(l) + ") = " + nm(L, lhs) +
                           " ≠ δ" + std::to_string(i) + std::to_string(l) + " = " +
                           nm(L, A.delta[i][l]));
              found = true;
            }
          }
        }
      if (!found) rep.pass("delta.compose");
    }
  }

  if (A.boolean_axiom5) {
    DistributivityResult d = is_distributive(A);
    if (d.distributive)
      rep.pass("distributive");
    else {
      auto [a, b, c] = d.witness;
      rep.fail("distributive", {nm(L, a), nm(L, b), nm(L, c)},
               nm(L, a) + " ∧ (" + nm(L, b) + " ∨ " + nm(L, c) + ") = " +
                   nm(L, L.meet(a, L.join(b, c))) + " but (" + nm(L, a) + " ∧ " + nm(L, b) +
                   ") ∨ (" + nm(L, a) + " ∧ " + nm(L, c) + ") = " +
                   nm(L, L.join(L.meet(a, b), L.meet(a, c))));
    }
    bool found = false;
    for (int i = 0; i < m && !found; ++i)
      for (int k = 0; k < m && !found; ++k) {
        if (i == k) continue;
        for (int a = 0; a < n && !found; ++a) {
          // Substitution sᵢᵏ(a) = ∃ᵢ(δᵢₖ ∧ a) must send complements to
          // disjoint elements: ∃ᵢ(δᵢₖ ∧ a) ∧ ∃ᵢ(δᵢₖ ∧ a⊥) = 0 for i ≠ k.
          int left = A.exists[i][L.meet(A.delta[i][k], a)];
          int right = A.exists[i][L.meet(A.delta[i][k], A.comp(a))];
          int v = L.meet(left, right);
          if (v != L.bottom()) {
            rep.fail("axiom5", {std::to_string(i), std::to_string(k), nm(L, a)},
                     "∃" + std::to_string(i) + "(δ" + std::to_string(i) + std::to_string(k) +
                         " ∧ " + nm(L, a) + ") ∧ ∃" + std::to_string(i) + "(δ" +
                         std::to_string(i) + std::to_string(k) + " ∧ " + nm(L, A.comp(a)) +
                         ") = " + nm(L, v) + " ≠ " + nm(L, L.bottom()));
            found = true;
          }
        }
      }
    if (m > 1) {
      if (!found) rep.pass("axiom5");
    }
  }

  return rep;
}

ValidationReport validate_homomorphism(const AlgebraHom& h) {
  const Lattice& S = h.source.lat;
  const Lattice& T = h.target.lat;
  if (h.source.dims() != h.target.dims())
    throw StructuralError("homomorphism between algebras of different dimension counts: " +
                          std::to_string(h.source.dims()) + " vs " +
                          std::to_string(h.target.dims()));
  if (static_cast<int>(h.map.size()) != S.size())
    throw StructuralError("homomorphism map is not total");
  for (int v : h.map)
    if (v < 0 || v >= T.size())
      throw StructuralError("homomorphism map references an unknown target element");

  ValidationReport rep(h.name.empty() ? "homomorphism conditions" : h.name);
  const int n = S.size();
  const int m = h.source.dims();
  auto H = [&](int a) { return h.map[a]; };

  if (H(S.bottom()) == T.bottom())
    rep.pass("hom.bottom");
  else
    rep.fail("hom.bottom", {}, "h(" + nm(S, S.bottom()) + ") = " + nm(T, H(S.bottom())) + " ≠ " +
                                   nm(T, T.bottom()));
  if (H(S.top()) == T.top())
    rep.pass("hom.top");
  else
    rep.fail("hom.top", {},
             "h(" + nm(S, S.top()) + ") = " + nm(T, H(S.top())) + " ≠ " + nm(T, T.top()));
  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b)
        if (H(S.meet(a, b)) != T.meet(H(a), H(b))) {
          rep.fail("hom.meet", {nm(S, a), nm(S, b)},
                   "h(" + nm(S, a) + " ∧ " + nm(S, b) + ") = " + nm(T, H(S.meet(a, b))) +
                       " but h(" + nm(S, a) + ") ∧ h(" + nm(S, b) + ") = " +
                       nm(T, T.meet(H(a), H(b))));
          found = true;
        }
    if (!found) rep.pass("hom.meet");
  }
  {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = 0; b < n && !found; ++b)
        if (H(S.join(a, b)) != T.join(H(a), H(b))) {
          rep.fail("hom.join", {nm(S, a), nm(S, b)},
                   "h(" + nm(S, a) + " ∨ " + nm(S, b) + ") = " + nm(T, H(S.join(a, b))) +
                       " but h(" + nm(S, a) + ") ∨ h(" + nm(S, b) + ") = " +
                       nm(T, T.join(H(a), H(b))));
          found = true;
        }
    if (!found) rep.pass("hom.join");
  }
  {
    int w = -1;
    for (int a = 0; a < n && w < 0; ++a)
      if (H(h.source.comp(a)) != h.target.comp(H(a))) w = a;
    if (w < 0)
      rep.pass("hom.ocomp");
    else
      rep.fail("hom.ocomp", {nm(S, w)},
               "h(" + nm(S, w) + "⊥) = " + nm(T, H(h.source.comp(w))) + " but h(" + nm(S, w) +
                   ")⊥ = " + nm(T, h.target.comp(H(w))));
  }
  if (m > 0) {
    bool found = false;
    for (int i = 0; i < m && !found; ++i)
      for (int a = 0; a < n && !found; ++a)
        if (H(h.source.exists[i][a]) != h.target.exists[i][H(a)]) {
          rep.fail("hom.exists", {std::to_string(i), nm(S, a)},
                   "h(∃" + std::to_string(i) + " " + nm(S, a) + ") = " +
                       nm(T, H(h.source.exists[i][a])) + " but ∃" + std::to_string(i) + " h(" +
                       nm(S, a) + ") = " + nm(T, h.target.exists[i][H(a)]));
          found = true;
        }
    if (!found) rep.pass("hom.exists");

    bool dfound = false;
    for (int i = 0; i < m && !dfound; ++i)
      for (int k = 0; k < m && !dfound; ++k)
        if (H(h.source.delta[i][k]) != h.target.delta[i][k]) {
          rep.fail("hom.delta", {std::to_string(i), std::to_string(k)},
                   "h(δ" + std::to_string(i) + std::to_string(k) + ") = " +
                       nm(T, H(h.source.delta[i][k])) + " ≠ " + nm(T, h.target.delta[i][k]));
          dfound = true;
        }
    if (!dfound) rep.pass("hom.delta");
  }

  return rep;
}

}  // namespace cylo
