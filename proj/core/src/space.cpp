#include "cylo/space.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cylo/filters.hpp"
#include "cylo/lattice.hpp"

namespace cylo {

namespace {

bool family_contains(const std::vector<Bitset>& fam, const Bitset& s) {
  return std::binary_search(fam.begin(), fam.end(), s, Bitset::lex_less);
}

Bitset family_union(const std::vector<Bitset>& fam, std::size_t n) {
  Bitset u(n);
  for (const auto& s : fam) u |= s;
  return u;
}

}  // namespace

FiniteSpace make_space(std::string name, std::vector<std::string> points,
                       std::vector<Bitset> basis, const Limits& lim) {
  FiniteSpace X;
  X.name = std::move(name);
  X.points = std::move(points);
  const int n = X.n();
  if (n < 1) throw ArgumentError("a space needs at least one point");

  std::set<Bitset, BitsetLexLess> seen;
  for (auto& b : basis) {
    if (b.universe() != static_cast<std::size_t>(n))
      throw ArgumentError("a basis set is not a subset of the point set");
    if (seen.insert(b).second) X.basis.push_back(b);
  }

  Bitset cover = family_union(X.basis, n);
  if (!cover.is_full()) {
    int x = (~cover).find_first();
    throw StructuralError("the basis does not cover the space: no basic set contains " +
                          X.points[x]);
  }
  for (std::size_t i = 0; i < X.basis.size(); ++i)
    for (std::size_t k = i + 1; k < X.basis.size(); ++k) {
      Bitset inter = X.basis[i] & X.basis[k];
      bool bad = false;
      inter.for_each([&](int x) {
        if (bad) return;
        for (const auto& c : X.basis)
          if (c.test(x) && c.subset_of(inter)) return;
        bad = true;
        throw StructuralError("the given family is not a basis: no basic neighborhood of " +
                              X.points[x] + " lies inside " + set_name(X.points, X.basis[i]) +
                              " ∩ " + set_name(X.points, X.basis[k]));
      });
    }

  std::map<Bitset, int, BitsetLexLess> known;
  std::vector<Bitset> work;
  work.push_back(Bitset(n));
  for (const auto& b : X.basis) work.push_back(b);
  std::vector<Bitset> out;
  for (auto& s : work)
    if (known.emplace(s, 0).second) out.push_back(s);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      Bitset v = out[i] | out[k];
      if (known.emplace(v, 0).second) {
        out.push_back(std::move(v));
        if (out.size() > lim.max_family)
          throw ResourceGuardError("the generated topology exceeds the size guard of " +
                                       std::to_string(lim.max_family) + " opens",
                                   lim.max_family);
      }
    }
  std::sort(out.begin(), out.end(), Bitset::lex_less);
  X.opens = std::move(out);
  return X;
}

CylindricOrthoFrame frame_of(const FiniteSpace& X) {
  if (!X.has_perp()) throw ArgumentError("the space carries no orthogonality relation");
  CylindricOrthoFrame F;
  F.name = X.name;
  F.points = X.points;
  F.perp = X.perp;
  F.rels = X.rels;
  F.deltas = X.deltas;
  return F;
}

std::vector<Bitset> specialization_upsets(const FiniteSpace& X) {
  const int n = X.n();
  std::vector<Bitset> up(n, Bitset::full(n));
  for (const auto& b : X.basis)
    for (int x = 0; x < n; ++x)
      if (b.test(x)) up[x] &= b;
  return up;
}

Bitset upset_interior(const std::vector<Bitset>& up_rows, const Bitset& u) {
  Bitset out(u.universe());
  for (std::size_t x = 0; x < up_rows.size(); ++x)
    if (up_rows[x].subset_of(u)) out.set(x);
  return out;
}

Bitset upset_closure(const std::vector<Bitset>& up_rows, const Bitset& u) {
  Bitset out(u.universe());
  for (std::size_t x = 0; x < up_rows.size(); ++x)
    if (up_rows[x].intersects(u)) out.set(x);
  return out;
}

Bitset upset_star(const std::vector<Bitset>& up_rows, const Bitset& u) {
  Bitset out(u.universe());
  for (std::size_t x = 0; x < up_rows.size(); ++x)
    if (!up_rows[x].intersects(u)) out.set(x);
  return out;
}

ValidationReport verify_upset_operators(const FiniteSpace& X, const Limits& lim) {
  ValidationReport rep("upset operators on " + (X.name.empty() ? std::string("X") : X.name));
  const int n = X.n();
  std::vector<Bitset> up = specialization_upsets(X);

  std::vector<Bitset> scope;
  std::string how;
  if (n <= 62 && (std::uint64_t{1} << n) <= lim.max_scan) {
    std::uint64_t total = std::uint64_t{1} << n;
    scope.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) {
      Bitset s(n);
      for (int x = 0; x < n; ++x)
        if ((m >> x) & 1) s.set(x);
      scope.push_back(std::move(s));
    }
    how = "all " + std::to_string(total) + " subsets";
  } else {
    scope = X.opens;
    how = "the opens family (powerset beyond the scan guard)";
  }

  const Bitset all = Bitset::full(n);
  auto check = [&](const char* id, auto&& holds, const std::string& what) {
    for (const auto& u : scope)
      if (!holds(u)) {
        rep.fail(id, {set_name(X.points, u)}, what + " fails at " + set_name(X.points, u));
        return;
      }
    rep.pass(id, what + " over " + how);
  };

  check(
      "upset.int-cl-dual",
      [&](const Bitset& u) {
        return upset_interior(up, u) == all.minus(upset_closure(up, all.minus(u)));
      },
      "Int(U) = X ∖ Cl(X ∖ U)");
  check(
      "upset.extensive", [&](const Bitset& u) { return u.subset_of(upset_closure(up, u)); },
      "U ⊆ Cl(U)");
  check(
      "upset.idempotent",
      [&](const Bitset& u) {
        Bitset i = upset_interior(up, u);
        return upset_interior(up, i) == i && i.subset_of(u);
      },
      "Int contractive and idempotent");
  check(
      "upset.star",
      [&](const Bitset& u) { return upset_star(up, u) == upset_interior(up, all.minus(u)); },
      "U* = Int(X ∖ U)");
  return rep;
}

namespace {

/// Literal compactness scan for one open set: enumerates subfamilies of the
/// basics inside `u` (within the remaining budget) and confirms that every
/// cover of `u` admits a finite subcover, namely itself. Returns the number
/// of masks scanned; sets `exhausted` when the budget ran out.
std::uint64_t cover_scan(const FiniteSpace& X, const Bitset& u, std::uint64_t budget,
                         std::uint64_t& covers, bool& exhausted) {
  std::vector<int> inside;
  for (std::size_t b = 0; b < X.basis.size(); ++b)
    if (X.basis[b].subset_of(u)) inside.push_back(static_cast<int>(b));
  const int k = static_cast<int>(inside.size());
  std::uint64_t total = k >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << k);
  std::uint64_t limit = total;
  if (limit > budget) {
    limit = budget;
    exhausted = true;
  }
  const int n = X.n();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Bitset uni(n);
    for (int b = 0; b < k; ++b)
      if ((mask >> b) & 1) uni |= X.basis[inside[b]];
    if (uni == u) ++covers;  // a cover; it is its own finite subcover
  }
  return limit;
}

}  // namespace

OpenFamilies open_families(const FiniteSpace& X, const Limits& lim) {
  OpenFamilies F;
  const int n = X.n();

  std::uint64_t budget = lim.max_scan;
  std::uint64_t scanned = 0, covers = 0;
  bool exhausted = false;
  for (const auto& u : X.opens) {
    // Openness re-check: u is the union of the basics inside it.
    Bitset uni(n);
    for (const auto& b : X.basis)
      if (b.subset_of(u)) uni |= b;
    if (!(uni == u))
      throw StructuralError("open set " + set_name(X.points, u) +
                            " is not a union of basic sets");
    std::uint64_t used = cover_scan(X, u, budget, covers, exhausted);
    scanned += used;
    budget -= used;
    F.co.push_back(u);
  }
  F.co_scan_exhaustive = !exhausted;
  F.co_note = (exhausted ? std::string("partial (scan guard reached): ") : std::string()) +
              std::to_string(scanned) + " basic subfamilies scanned, " + std::to_string(covers) +
              " covers certified with themselves as finite subcovers";

  if (X.has_perp()) {
    CylindricOrthoFrame fr = frame_of(X);
    for (const auto& u : F.co)
      if (biclosure(fr, u) == u) F.cob.push_back(u);
  }

  std::vector<Bitset> up = specialization_upsets(X);
  for (const auto& u : X.opens)
    if (upset_star(up, upset_star(up, u)) == u) F.reg.push_back(u);

  std::set_intersection(F.co.begin(), F.co.end(), F.reg.begin(), F.reg.end(),
                        std::back_inserter(F.coreg), Bitset::lex_less);
  return F;
}

namespace {

void check_t0(const FiniteSpace& X, ValidationReport& rep, const char* id) {
  std::vector<Bitset> up = specialization_upsets(X);
  for (int x = 0; x < X.n(); ++x)
    for (int y = x + 1; y < X.n(); ++y)
      if (up[x].test(y) && up[y].test(x)) {
        rep.fail(id, {X.points[x], X.points[y]},
                 "no open set separates " + X.points[x] + " and " + X.points[y]);
        return;
      }
  rep.pass(id);
}

/// Filter-realization condition: every proper filter of the lattice carried
/// by `fam` (ordered by inclusion) is the neighborhood family of a point.
void check_filter_realization(const FiniteSpace& X, const std::vector<Bitset>& fam,
                              ValidationReport& rep, const char* id, const Limits& lim) {
  if (fam.size() > lim.max_lattice)
    throw ResourceGuardError("the neighborhood lattice with " + std::to_string(fam.size()) +
                                 " sets exceeds the lattice size guard",
                             lim.max_lattice);
  std::vector<std::string> names;
  names.reserve(fam.size());
  for (const auto& s : fam) names.push_back(set_name(X.points, s));
  Lattice L = Lattice::from_inclusion(names, fam);
  FilterSpectrum spec = enumerate_proper_filters(L, lim);

  // point -> ids of family members containing it
  std::vector<Bitset> nbhd(X.n(), Bitset(fam.size()));
  for (std::size_t u = 0; u < fam.size(); ++u)
    fam[u].for_each([&](int x) { nbhd[x].set(u); });

  for (int f = 0; f < spec.size(); ++f) {
    bool realized = false;
    for (int x = 0; x < X.n() && !realized; ++x)
      if (nbhd[x] == spec.filters[f]) realized = true;
    if (!realized) {
      rep.fail(id, {spec.names[f]},
               "the proper filter " + spec.names[f] + " is not the neighborhood family of any point");
      return;
    }
  }
  rep.pass(id);
}

void check_basis_family(const FiniteSpace& X, const std::vector<Bitset>& fam,
                        ValidationReport& rep, const char* id) {
  for (const auto& u : X.opens) {
    Bitset uni(X.n());
    for (const auto& v : fam)
      if (v.subset_of(u)) uni |= v;
    if (!(uni == u)) {
      rep.fail(id, {set_name(X.points, u)},
               set_name(X.points, u) + " is not a union of members of the family");
      return;
    }
  }
  rep.pass(id);
}

void check_cap_closed(const FiniteSpace& X, const std::vector<Bitset>& fam,
                      ValidationReport& rep, const char* id) {
  for (std::size_t a = 0; a < fam.size(); ++a)
    for (std::size_t b = a; b < fam.size(); ++b)
      if (!family_contains(fam, fam[a] & fam[b])) {
        rep.fail(id, {set_name(X.points, fam[a]), set_name(X.points, fam[b])},
                 "the intersection leaves the family");
        return;
      }
  rep.pass(id);
}

}  // namespace

ValidationReport is_spectral(const FiniteSpace& X, const Limits& lim) {
  ValidationReport rep("spectrality of " + (X.name.empty() ? std::string("X") : X.name));
  check_t0(X, rep, "spectral.t0");

  {
    // Literal compactness of the whole space: every basic cover of X has a
    // finite subcover (itself).
    std::uint64_t covers = 0;
    bool exhausted = false;
    std::uint64_t used = cover_scan(X, Bitset::full(X.n()), lim.max_scan, covers, exhausted);
    rep.pass("spectral.compact",
             (exhausted ? std::string("partial (scan guard reached): ") : std::string()) +
                 std::to_string(used) + " basic subfamilies scanned, " + std::to_string(covers) +
                 " covers of the space certified with themselves as finite subcovers");
  }

  OpenFamilies fam = open_families(X, lim);
  {
    bool bad = false;
    for (std::size_t a = 0; a < fam.co.size() && !bad; ++a)
      for (std::size_t b = a; b < fam.co.size() && !bad; ++b)
        if (!family_contains(fam.co, fam.co[a] & fam.co[b])) {
          rep.fail("spectral.coherent",
                   {set_name(X.points, fam.co[a]), set_name(X.points, fam.co[b])},
                   "the intersection of two compact opens is not compact open");
          bad = true;
        }
    if (!bad) {
      for (const auto& u : X.opens) {
        Bitset uni(X.n());
        for (const auto& v : fam.co)
          if (v.subset_of(u)) uni |= v;
        if (!(uni == u)) {
          rep.fail("spectral.coherent", {set_name(X.points, u)},
                   set_name(X.points, u) + " is not a union of compact opens");
          bad = true;
          break;
        }
      }
    }
    if (!bad) rep.pass("spectral.coherent");
  }

  {
    if (fam.co.size() > lim.max_lattice)
      throw ResourceGuardError("the compact-open lattice with " + std::to_string(fam.co.size()) +
                                   " sets exceeds the lattice size guard",
                               lim.max_lattice);
    std::vector<std::string> names;
    for (const auto& s : fam.co) names.push_back(set_name(X.points, s));
    Lattice L = Lattice::from_inclusion(names, fam.co);
    FilterSpectrum spec = enumerate_proper_filters(L, lim);
    std::vector<bool> prime = prime_flags(L, spec);

    std::vector<Bitset> nbhd(X.n(), Bitset(fam.co.size()));
    for (std::size_t u = 0; u < fam.co.size(); ++u)
      fam.co[u].for_each([&](int x) { nbhd[x].set(u); });

    bool bad = false;
    for (int f = 0; f < spec.size() && !bad; ++f) {
      if (!prime[f]) continue;
      int hits = 0, first = -1, second = -1;
      for (int x = 0; x < X.n(); ++x)
        if (nbhd[x] == spec.filters[f]) {
          if (hits == 0)
            first = x;
          else
            second = x;
          ++hits;
        }
      if (hits == 0) {
        rep.fail("spectral.sober", {spec.names[f]},
                 "the completely prime filter " + spec.names[f] +
                     " is not the neighborhood filter of any point");
        bad = true;
      } else if (hits > 1) {
        rep.fail("spectral.sober", {spec.names[f]},
                 "the completely prime filter " + spec.names[f] +
                     " is the neighborhood filter of both " + X.points[first] + " and " +
                     X.points[second]);
        bad = true;
      }
    }
    if (!bad) rep.pass("spectral.sober");
  }

  return rep;
}

ValidationReport validate_uvo(const FiniteSpace& X, const Limits& lim) {
  if (!X.has_perp()) throw ArgumentError("a UVO-space needs an orthogonality relation");
  ValidationReport rep((X.name.empty() ? std::string("X") : X.name) + " as a UVO-space");
  CylindricOrthoFrame fr = frame_of(X);
  rep.merge("frame", validate_frame(fr));
  check_t0(X, rep, "uvo.t0");

  OpenFamilies fam = open_families(X, lim);
  const auto& cob = fam.cob;
  const int n = X.n();
  const int m = X.dims();

  check_basis_family(X, cob, rep, "uvo.basis");
  check_cap_closed(X, cob, rep, "uvo.cap-closed");

  std::vector<Bitset> cob_perp;
  cob_perp.reserve(cob.size());
  for (const auto& u : cob) cob_perp.push_back(perp_set(fr, u));
  {
    bool bad = false;
    for (std::size_t a = 0; a < cob.size() && !bad; ++a)
      if (!family_contains(cob, cob_perp[a])) {
        rep.fail("uvo.perp-closed", {set_name(X.points, cob[a])},
                 "the orthocomplement leaves the family");
        bad = true;
      }
    if (!bad) rep.pass("uvo.perp-closed");
  }

  check_filter_realization(X, cob, rep, "uvo.filter-realization", lim);

  {
    bool bad = false;
    for (int x = 0; x < n && !bad; ++x)
      for (int y = 0; y < n && !bad; ++y) {
        if (!X.perp[x].test(y)) continue;
        bool witness = false;
        for (std::size_t a = 0; a < cob.size() && !witness; ++a)
          if (cob[a].test(x) && cob_perp[a].test(y)) witness = true;
        if (!witness) {
          rep.fail("uvo.separation", {X.points[x], X.points[y]},
                   "no compact open biorthogonally closed U has " + X.points[x] + " ∈ U and " +
                       X.points[y] + " ∈ U⊥");
          bad = true;
        }
      }
    if (!bad) rep.pass("uvo.separation");
  }

  if (m > 0) {
    bool bad = false;
    for (int i = 0; i < m && !bad; ++i)
      for (std::size_t a = 0; a < cob.size() && !bad; ++a)
        if (!family_contains(cob, rel_image(X.rels[i], cob[a]))) {
          rep.fail("uvo.rel-image", {std::to_string(i), set_name(X.points, cob[a])},
                   "R" + std::to_string(i) + "[U] leaves the family");
          bad = true;
        }
    if (!bad) rep.pass("uvo.rel-image");
  }

  if (m > 0) {
    bool bad = false;
    for (int i = 0; i < m && !bad; ++i)
      for (int x = 0; x < n && !bad; ++x)
        for (int y = 0; y < n && !bad; ++y) {
          if (X.rels[i][x].test(y)) continue;
          bool witness = false;
          for (std::size_t a = 0; a < cob.size() && !witness; ++a) {
            if (!cob[a].test(x)) continue;
            Bitset ex = biclosure(fr, rel_image(X.rels[i], cob[a]));
            if (!ex.test(y)) witness = true;
          }
          if (!witness) {
            rep.fail("uvo.rel-witness", {std::to_string(i), X.points[x], X.points[y]},
                     "no ∃-image of a compact open biorthogonally closed neighborhood of " +
                         X.points[x] + " omits " + X.points[y]);
            bad = true;
          }
        }
    if (!bad) rep.pass("uvo.rel-witness");
  }

  if (m > 0) {
    bool bad = false;
    for (int i = 0; i < m && !bad; ++i)
      for (int k = 0; k < m && !bad; ++k)
        if (!family_contains(fam.co, X.deltas[i][k])) {
          rep.fail("uvo.delta-compact-open", {std::to_string(i), std::to_string(k)},
                   "Δ" + std::to_string(i) + std::to_string(k) + " is not compact open");
          bad = true;
        }
    if (!bad) rep.pass("uvo.delta-compact-open");
  }

  return rep;
}

ValidationReport validate_uv(const FiniteSpace& X, const Limits& lim) {
  ValidationReport rep((X.name.empty() ? std::string("X") : X.name) + " as a UV-space");
  check_t0(X, rep, "uv.t0");

  OpenFamilies fam = open_families(X, lim);
  const auto& creg = fam.coreg;
  std::vector<Bitset> up = specialization_upsets(X);
  const int n = X.n();
  const int m = X.dims();

  check_basis_family(X, creg, rep, "uv.basis");
  check_cap_closed(X, creg, rep, "uv.cap-closed");
  {
    bool bad = false;
    for (const auto& u : creg)
      if (!family_contains(creg, upset_star(up, u))) {
        rep.fail("uv.star-closed", {set_name(X.points, u)}, "the star leaves the family");
        bad = true;
        break;
      }
    if (!bad) rep.pass("uv.star-closed");
  }

  check_filter_realization(X, creg, rep, "uv.filter-realization", lim);

  if (m > 0) {
    bool bad = false;
    for (int i = 0; i < m && !bad; ++i) {
      const auto& S = X.rels[i];
      for (int x = 0; x < n && !bad; ++x) {
        if (!S[x].test(x)) {
          rep.fail("uv.equivalence", {std::to_string(i), X.points[x]},
                   "S" + std::to_string(i) + " is not reflexive at " + X.points[x]);
          bad = true;
        }
      }
      for (int x = 0; x < n && !bad; ++x)
        for (int y = 0; y < n && !bad; ++y)
          if (S[x].test(y) && !S[y].test(x)) {
            rep.fail("uv.equivalence", {std::to_string(i), X.points[x], X.points[y]},
                     "S" + std::to_string(i) + " is not symmetric on (" + X.points[x] + ", " +
                         X.points[y] + ")");
            bad = true;
          }
      for (int x = 0; x < n && !bad; ++x)
        for (int y = 0; y < n && !bad; ++y) {
          if (!S[x].test(y)) continue;
          if (!S[y].subset_of(S[x])) {
            int z = S[y].minus(S[x]).find_first();
            rep.fail("uv.equivalence", {std::to_string(i), X.points[x], X.points[y], X.points[z]},
                     "S" + std::to_string(i) + " is not transitive");
            bad = true;
            break;
          }
        }
    }
    if (!bad) rep.pass("uv.equivalence");
  }

  if (m > 1) {
    bool bad = false;
    for (int i = 0; i < m && !bad; ++i)
      for (int k = i + 1; k < m && !bad; ++k)
        for (int x = 0; x < n && !bad; ++x) {
          Bitset ik = rel_image(X.rels[k], X.rels[i][x]);
          Bitset ki = rel_image(X.rels[i], X.rels[k][x]);
          if (!(ik == ki)) {
            Bitset diff = ik.subset_of(ki) ? ki.minus(ik) : ik.minus(ki);
            rep.fail("uv.commute",
                     {std::to_string(i), std::to_string(k), X.points[x],
                      X.points[diff.find_first()]},
                     "the composites of S" + std::to_string(i) + " and S" + std::to_string(k) +
                         " differ from " + X.points[x]);
            bad = true;
          }
        }
    if (!bad) rep.pass("uv.commute");
  }

  if (m > 0) {
    {
      bool bad = false;
      for (int i = 0; i < m && !bad; ++i)
        for (int k = 0; k < m && !bad; ++k)
          if (!(upset_star(up, upset_star(up, X.deltas[i][k])) == X.deltas[i][k])) {
            rep.fail("uv.delta-regular", {std::to_string(i), std::to_string(k)},
                     "Δ" + std::to_string(i) + std::to_string(k) + " is not regular open");
            bad = true;
          }
      if (!bad) rep.pass("uv.delta-regular");
    }
    {
      bool bad = false;
      for (int i = 0; i < m && !bad; ++i)
        for (int k = i + 1; k < m && !bad; ++k)
          if (!(X.deltas[i][k] == X.deltas[k][i])) {
            rep.fail("uv.delta-symmetric", {std::to_string(i), std::to_string(k)},
                     "Δ" + std::to_string(i) + std::to_string(k) + " ≠ Δ" + std::to_string(k) +
                         std::to_string(i));
            bad = true;
          }
      if (!bad) rep.pass("uv.delta-symmetric");
    }
    {
      int w = -1;
      for (int i = 0; i < m && w < 0; ++i)
        if (!X.deltas[i][i].is_full()) w = i;
      if (w < 0)
        rep.pass("uv.delta-identity");
      else
        rep.fail("uv.delta-identity", {std::to_string(w)},
                 "Δ" + std::to_string(w) + std::to_string(w) + " is not the full point set");
    }
    {
      bool bad = false;
      for (int i = 0; i < m && !bad; ++i)
        for (int k = 0; k < m && !bad; ++k) {
          if (k == i) continue;
          for (int l = 0; l < m && !bad; ++l) {
            if (k == l) continue;
            if (!(rel_image(X.rels[k], X.deltas[i][k] & X.deltas[k][l]) == X.deltas[i][l])) {
              rep.fail("uv.delta-compose",
                       {std::to_string(i), std::to_string(k), std::to_string(l)},
                       "S" + std::to_string(k) + "[Δ" + std::to_string(i) + std::to_string(k) +
                           " ∩ Δ" + std::to_string(k) + std::to_string(l) + "] ≠ Δ" +
                           std::to_string(i) + std::to_string(l));
              bad = true;
            }
          }
        }
      if (!bad) rep.pass("uv.delta-compose");
    }
    if (m > 1) {
      bool bad = false;
      for (int i = 0; i < m && !bad; ++i)
        for (int k = 0; k < m && !bad; ++k) {
          if (i == k) continue;
          for (const auto& u : creg) {
            Bitset lhs = rel_image(X.rels[i], X.deltas[i][k] & u);
            Bitset rhs = rel_image(X.rels[i], X.deltas[i][k] & upset_star(up, u));
            if (lhs.intersects(rhs)) {
              rep.fail("uv.disjointness",
                       {std::to_string(i), std::to_string(k), set_name(X.points, u)},
                       "S" + std::to_string(i) + "[Δ∩U] meets S" + std::to_string(i) +
                           "[Δ∩U*] at " + X.points[(lhs & rhs).find_first()]);
              bad = true;
              break;
            }
          }
        }
      if (!bad) rep.pass("uv.disjointness");
    }
    {
      bool bad = false;
      for (int i = 0; i < m && !bad; ++i)
        for (const auto& u : creg)
          if (!family_contains(creg, rel_image(X.rels[i], u))) {
            rep.fail("uv.rel-image", {std::to_string(i), set_name(X.points, u)},
                     "S" + std::to_string(i) + "[U] leaves the family");
            bad = true;
            break;
          }
      if (!bad) rep.pass("uv.rel-image");
    }
    {
      // x not S_i y must split the families of ∃-images of neighborhoods.
      bool bad = false;
      for (int i = 0; i < m && !bad; ++i) {
        std::vector<std::set<Bitset, BitsetLexLess>> images(n);
        for (int x = 0; x < n; ++x)
          for (const auto& u : creg)
            if (u.test(x)) images[x].insert(rel_image(X.rels[i], u));
        for (int x = 0; x < n && !bad; ++x)
          for (int y = 0; y < n && !bad; ++y) {
            if (X.rels[i][x].test(y)) continue;
            if (images[x] == images[y]) {
              rep.fail("uv.rel-witness", {std::to_string(i), X.points[x], X.points[y]},
                       "the ∃-image families of the neighborhoods of " + X.points[x] + " and " +
                           X.points[y] + " coincide");
              bad = true;
            }
          }
      }
      if (!bad) rep.pass("uv.rel-witness");
    }
    {
      bool bad = false;
      for (int i = 0; i < m && !bad; ++i)
        for (int k = 0; k < m && !bad; ++k)
          if (!family_contains(fam.co, X.deltas[i][k])) {
            rep.fail("uv.delta-compact-open", {std::to_string(i), std::to_string(k)},
                     "Δ" + std::to_string(i) + std::to_string(k) + " is not compact open");
            bad = true;
          }
      if (!bad) rep.pass("uv.delta-compact-open");
    }
  }

  return rep;
}

}  // namespace cylo
