#include "cylo/duality.hpp"

#include <algorithm>

#include "cylo/filters.hpp"

namespace cylo {

namespace {

std::string algebra_name(const CylindricOrtholattice& A) {
  return A.name.empty() ? std::string("A") : A.name;
}

/// φ(a) = {x : a in x} over the points of a filter spectrum.
std::vector<Bitset> phi_sets(const CylindricOrtholattice& A, const FilterSpectrum& spec) {
  const int np = spec.size();
  std::vector<Bitset> out(A.size(), Bitset(np));
  for (int a = 0; a < A.size(); ++a)
    for (int x = 0; x < np; ++x)
      if (spec.filters[x].test(a)) out[a].set(x);
  return out;
}

/// φ as a table of target ids into a set-carried algebra.
std::vector<int> phi_table(const CylindricOrtholattice& A, const SetAlgebra& C,
                           const Limits& lim) {
  FilterSpectrum spec = enumerate_proper_filters(A.lat, lim);
  std::vector<Bitset> sets = phi_sets(A, spec);
  std::vector<int> out(A.size());
  for (int a = 0; a < A.size(); ++a) {
    int id = C.index_of(sets[a]);
    if (id < 0)
      throw StructuralError("the image of " + A.lat.name(a) + " is not a member of " +
                            C.alg.name);
    out[a] = id;
  }
  return out;
}

/// ψ(x) = {U : x in U} as a point of the spectrum of the set-carried
/// algebra C, resolved through the given filter spectrum of C.
std::vector<int> psi_table(const FiniteSpace& X, const SetAlgebra& C,
                           const FilterSpectrum& cspec) {
  std::vector<int> out(X.n(), -1);
  for (int x = 0; x < X.n(); ++x) {
    Bitset nbhd(C.alg.size());
    for (std::size_t u = 0; u < C.sets.size(); ++u)
      if (C.sets[u].test(x)) nbhd.set(static_cast<int>(u));
    out[x] = cspec.index_of(nbhd);
    if (out[x] < 0)
      throw StructuralError("the neighborhood family of " + X.points[x] +
                            " is not a proper filter of " + C.alg.name);
  }
  return out;
}

SetAlgebra family_algebra(const FiniteSpace& X, std::vector<Bitset> family, std::string name,
                          const Limits& lim) {
  SetAlgebra B;
  B.sets = std::move(family);
  B.point_names = X.points;
  if (B.sets.size() > lim.max_lattice)
    throw ResourceGuardError(name + " with " + std::to_string(B.sets.size()) +
                                 " members exceeds the algebra size guard",
                             lim.max_lattice);
  std::vector<std::string> names;
  names.reserve(B.sets.size());
  for (const auto& s : B.sets) names.push_back(set_name(X.points, s));
  B.alg.lat = Lattice::from_inclusion(std::move(names), B.sets);
  B.alg.name = std::move(name);
  return B;
}

int family_lookup(const SetAlgebra& B, const Bitset& s, const char* what) {
  int id = B.index_of(s);
  if (id < 0)
    throw StructuralError(std::string(what) + " left the family of " + B.alg.name + " at " +
                          set_name(B.point_names, s));
  return id;
}

/// Appends homomorphism checks under a new prefix replacing "hom.".
void append_hom_checks(ValidationReport& rep, const AlgebraHom& h, const std::string& prefix) {
  ValidationReport sub = validate_homomorphism(h);
  for (const auto& c : sub.checks()) {
    CheckResult copy = c;
    if (copy.axiom.rfind("hom.", 0) == 0) copy.axiom = prefix + copy.axiom.substr(4);
    rep.add(std::move(copy));
  }
}

}  // namespace

FiniteSpace spectrum_space(const CylindricOrtholattice& A, const Limits& lim) {
  FilterSpectrum spec = enumerate_proper_filters(A.lat, lim);
  CylindricOrthoFrame fr = goldblatt_frame(A, lim);
  FiniteSpace X = make_space("S0(" + algebra_name(A) + ")", fr.points, phi_sets(A, spec), lim);
  X.perp = fr.perp;
  X.rels = fr.rels;
  X.deltas = fr.deltas;
  return X;
}

FiniteSpace boolean_spectrum(const CylindricOrtholattice& A, const Limits& lim) {
  CylindricOrtholattice B = A;
  B.boolean_axiom5 = true;
  ValidationReport battery = validate_cylindric(B);
  if (!battery.ok()) {
    for (const auto& c : battery.checks())
      if (!c.pass)
        throw ContractError("the Boolean track requires a cylindric Boolean algebra; " +
                            algebra_name(A) + " fails " + c.axiom);
  }

  FilterSpectrum spec = enumerate_proper_filters(A.lat, lim);
  const int np = spec.size();

  FiniteSpace X = make_space("F0(" + algebra_name(A) + ")", spec.names, phi_sets(A, spec), lim);

  const int m = A.dims();
  X.rels.assign(m, std::vector<Bitset>(np, Bitset(np)));
  for (int i = 0; i < m; ++i) {
    // ∃_i[x] = {∃_i a : a in x}; x S_i y iff the images coincide.
    std::vector<Bitset> image(np, Bitset(A.size()));
    for (int x = 0; x < np; ++x)
      spec.filters[x].for_each([&](int a) { image[x].set(A.exists[i][a]); });
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < np; ++y)
        if (image[x] == image[y]) X.rels[i][x].set(y);
  }

  X.deltas.assign(m, std::vector<Bitset>(m, Bitset(np)));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int x = 0; x < np; ++x)
        if (spec.filters[x].test(A.delta[i][k])) X.deltas[i][k].set(x);

  return X;
}

SetAlgebra cob_algebra(const FiniteSpace& X, const Limits& lim) {
  CylindricOrthoFrame fr = frame_of(X);
  OpenFamilies fam = open_families(X, lim);
  SetAlgebra B = family_algebra(X, std::move(fam.cob), "A0(" + X.name + ")", lim);

  const int n = B.alg.size();
  B.alg.ocomp.resize(n);
  for (int a = 0; a < n; ++a)
    B.alg.ocomp[a] = family_lookup(B, perp_set(fr, B.sets[a]), "orthocomplement");

  B.alg.exists.assign(X.dims(), std::vector<int>(n));
  for (int i = 0; i < X.dims(); ++i)
    for (int a = 0; a < n; ++a)
      B.alg.exists[i][a] =
          family_lookup(B, biclosure(fr, rel_image(X.rels[i], B.sets[a])), "quantifier");

  B.alg.delta.assign(X.dims(), std::vector<int>(X.dims()));
  for (int i = 0; i < X.dims(); ++i)
    for (int k = 0; k < X.dims(); ++k)
      B.alg.delta[i][k] = family_lookup(B, X.deltas[i][k], "diagonal constant");

  return B;
}

SetAlgebra coreg_algebra(const FiniteSpace& X, const Limits& lim) {
  OpenFamilies fam = open_families(X, lim);
  SetAlgebra B = family_algebra(X, std::move(fam.coreg), "G0(" + X.name + ")", lim);
  std::vector<Bitset> up = specialization_upsets(X);

  const int n = B.alg.size();
  B.alg.ocomp.resize(n);
  for (int a = 0; a < n; ++a)
    B.alg.ocomp[a] = family_lookup(B, upset_star(up, B.sets[a]), "star");

  B.alg.exists.assign(X.dims(), std::vector<int>(n));
  for (int i = 0; i < X.dims(); ++i)
    for (int a = 0; a < n; ++a)
      B.alg.exists[i][a] = family_lookup(B, rel_image(X.rels[i], B.sets[a]), "quantifier");

  B.alg.delta.assign(X.dims(), std::vector<int>(X.dims()));
  for (int i = 0; i < X.dims(); ++i)
    for (int k = 0; k < X.dims(); ++k)
      B.alg.delta[i][k] = family_lookup(B, X.deltas[i][k], "diagonal constant");

  B.alg.boolean_axiom5 = true;
  return B;
}

namespace {

IsoCertificate representation_certificate(const CylindricOrtholattice& A, const SetAlgebra& C,
                                          const Limits& lim) {
  IsoCertificate cert;
  cert.subject = "φ: " + algebra_name(A) + " → " + C.alg.name;
  cert.source_names = A.lat.names();
  cert.target_names = C.alg.lat.names();
  ValidationReport rep(cert.subject);

  FilterSpectrum spec = enumerate_proper_filters(A.lat, lim);
  std::vector<Bitset> sets = phi_sets(A, spec);
  cert.table.assign(A.size(), -1);
  bool total = true;
  for (int a = 0; a < A.size() && total; ++a) {
    cert.table[a] = C.index_of(sets[a]);
    if (cert.table[a] < 0) {
      rep.fail("rep.image", {A.lat.name(a)},
               "φ(" + A.lat.name(a) + ") = " + set_name(spec.names, sets[a]) +
                   " is not a member of " + C.alg.name);
      total = false;
    }
  }
  if (!total) {
    cert.report = std::move(rep);
    return cert;
  }
  rep.pass("rep.image");

  {
    bool found = false;
    for (int a = 0; a < A.size() && !found; ++a)
      for (int b = a + 1; b < A.size() && !found; ++b)
        if (cert.table[a] == cert.table[b]) {
          rep.fail("rep.injective", {A.lat.name(a), A.lat.name(b)},
                   "φ(" + A.lat.name(a) + ") = φ(" + A.lat.name(b) + ")");
          found = true;
        }
    if (!found) rep.pass("rep.injective");
  }
  {
    Bitset hit(C.alg.size());
    for (int id : cert.table) hit.set(id);
    if (hit.is_full())
      rep.pass("rep.onto");
    else {
      int miss = (~hit).find_first();
      rep.fail("rep.onto", {C.alg.lat.name(miss)},
               C.alg.lat.name(miss) + " is not in the image of φ");
    }
  }

  AlgebraHom e;
  e.name = "φ";
  e.source = A;
  e.target = C.alg;
  e.map = cert.table;
  append_hom_checks(rep, e, "rep.");
  cert.report = std::move(rep);
  return cert;
}

}  // namespace

IsoCertificate verify_representation_ol(const CylindricOrtholattice& A, const Limits& lim) {
  FiniteSpace X = spectrum_space(A, lim);
  return representation_certificate(A, cob_algebra(X, lim), lim);
}

IsoCertificate verify_representation_ba(const CylindricOrtholattice& A, const Limits& lim) {
  FiniteSpace X = boolean_spectrum(A, lim);
  return representation_certificate(A, coreg_algebra(X, lim), lim);
}

namespace {

HomeoCertificate realization_certificate(const FiniteSpace& X, const SetAlgebra& C,
                                         const FiniteSpace& Y, const Limits& lim) {
  HomeoCertificate cert;
  cert.subject = "ψ: " + X.name + " → " + Y.name;
  cert.source_points = X.points;
  cert.target_points = Y.points;
  ValidationReport rep(cert.subject);

  FilterSpectrum cspec = enumerate_proper_filters(C.alg.lat, lim);
  cert.table.assign(X.n(), -1);
  bool total = true;
  for (int x = 0; x < X.n() && total; ++x) {
    Bitset nbhd(C.alg.size());
    for (std::size_t u = 0; u < C.sets.size(); ++u)
      if (C.sets[u].test(x)) nbhd.set(static_cast<int>(u));
    cert.table[x] = cspec.index_of(nbhd);
    if (cert.table[x] < 0) {
      rep.fail("real.total", {X.points[x]},
               "the neighborhood family of " + X.points[x] + " is not a proper filter of " +
                   C.alg.name);
      total = false;
    }
  }
  if (!total) {
    cert.report = std::move(rep);
    return cert;
  }
  rep.pass("real.total");

  {
    bool found = false;
    for (int x = 0; x < X.n() && !found; ++x)
      for (int y = x + 1; y < X.n() && !found; ++y)
        if (cert.table[x] == cert.table[y]) {
          rep.fail("real.bijective", {X.points[x], X.points[y]},
                   "ψ(" + X.points[x] + ") = ψ(" + X.points[y] + ")");
          found = true;
        }
    if (!found) {
      if (X.n() == Y.n())
        rep.pass("real.bijective");
      else
        rep.fail("real.bijective", {},
                 "ψ is injective but " + std::to_string(Y.n() - X.n()) +
                     " spectrum points are not realized");
    }
  }

  {
    bool bad = false;
    for (const auto& u : X.opens) {
      Bitset img(Y.n());
      u.for_each([&](int x) { img.set(cert.table[x]); });
      if (!std::binary_search(Y.opens.begin(), Y.opens.end(), img, Bitset::lex_less)) {
        rep.fail("real.opens-forward", {set_name(X.points, u)},
                 "ψ[" + set_name(X.points, u) + "] is not open in " + Y.name);
        bad = true;
        break;
      }
    }
    if (!bad) rep.pass("real.opens-forward");
  }
  {
    bool bad = false;
    for (const auto& v : Y.opens) {
      Bitset pre(X.n());
      for (int x = 0; x < X.n(); ++x)
        if (v.test(cert.table[x])) pre.set(x);
      if (!std::binary_search(X.opens.begin(), X.opens.end(), pre, Bitset::lex_less)) {
        rep.fail("real.opens-backward", {set_name(Y.points, v)},
                 "ψ⁻¹[" + set_name(Y.points, v) + "] is not open in " + X.name);
        bad = true;
        break;
      }
    }
    if (!bad) rep.pass("real.opens-backward");
  }

  if (X.has_perp() && Y.has_perp()) {
    bool found = false;
    for (int x = 0; x < X.n() && !found; ++x)
      for (int y = 0; y < X.n() && !found; ++y)
        if (X.perp[x].test(y) != Y.perp[cert.table[x]].test(cert.table[y])) {
          rep.fail("real.perp", {X.points[x], X.points[y]},
                   "orthogonality of (" + X.points[x] + ", " + X.points[y] +
                       ") is not mirrored by ψ");
          found = true;
        }
    if (!found) rep.pass("real.perp");
  }

  if (X.dims() > 0) {
    bool found = false;
    for (int i = 0; i < X.dims() && !found; ++i)
      for (int x = 0; x < X.n() && !found; ++x)
        for (int y = 0; y < X.n() && !found; ++y)
          if (X.rels[i][x].test(y) != Y.rels[i][cert.table[x]].test(cert.table[y])) {
            rep.fail("real.rel", {std::to_string(i), X.points[x], X.points[y]},
                     "relation " + std::to_string(i) + " on (" + X.points[x] + ", " +
                         X.points[y] + ") is not mirrored by ψ");
            found = true;
          }
    if (!found) rep.pass("real.rel");

    bool bad = false;
    for (int i = 0; i < X.dims() && !bad; ++i)
      for (int k = 0; k < X.dims() && !bad; ++k) {
        Bitset pre(X.n());
        for (int x = 0; x < X.n(); ++x)
          if (Y.deltas[i][k].test(cert.table[x])) pre.set(x);
        if (!(pre == X.deltas[i][k])) {
          rep.fail("real.delta", {std::to_string(i), std::to_string(k)},
                   "ψ⁻¹[Δ'" + std::to_string(i) + std::to_string(k) + "] ≠ Δ" +
                       std::to_string(i) + std::to_string(k));
          bad = true;
        }
      }
    if (!bad) rep.pass("real.delta");
  }

  cert.report = std::move(rep);
  return cert;
}

}  // namespace

HomeoCertificate verify_realization_ol(const FiniteSpace& X, const Limits& lim) {
  SetAlgebra C = cob_algebra(X, lim);
  FiniteSpace Y = spectrum_space(C.alg, lim);
  return realization_certificate(X, C, Y, lim);
}

HomeoCertificate verify_realization_ba(const FiniteSpace& X, const Limits& lim) {
  SetAlgebra C = coreg_algebra(X, lim);
  FiniteSpace Y = boolean_spectrum(C.alg, lim);
  return realization_certificate(X, C, Y, lim);
}

namespace {

SpaceMap preimage_point_map(const AlgebraHom& h, FiniteSpace source, FiniteSpace target,
                            std::string name, const Limits& lim) {
  SpaceMap f;
  f.name = std::move(name);
  f.source = std::move(source);
  f.target = std::move(target);

  FilterSpectrum sspec = enumerate_proper_filters(h.target.lat, lim);
  FilterSpectrum tspec = enumerate_proper_filters(h.source.lat, lim);
  f.map.resize(sspec.size());
  for (int y = 0; y < sspec.size(); ++y) {
    Bitset pre(h.source.size());
    for (int a = 0; a < h.source.size(); ++a)
      if (sspec.filters[y].test(h.map[a])) pre.set(a);
    int id = tspec.index_of(pre);
    if (id < 0)
      throw StructuralError("h⁻¹[" + sspec.names[y] +
                            "] is not a proper filter; the input map is not a homomorphism");
    f.map[y] = id;
  }
  return f;
}

}  // namespace

SpaceMap dual_of_hom(const AlgebraHom& h, const Limits& lim) {
  return preimage_point_map(h, spectrum_space(h.target, lim), spectrum_space(h.source, lim),
                            "S1(" + (h.name.empty() ? std::string("h") : h.name) + ")", lim);
}

SpaceMap dual_of_hom_ba(const AlgebraHom& h, const Limits& lim) {
  return preimage_point_map(h, boolean_spectrum(h.target, lim), boolean_spectrum(h.source, lim),
                            "F1(" + (h.name.empty() ? std::string("h") : h.name) + ")", lim);
}

namespace {

AlgebraHom preimage_element_map(const SpaceMap& f, SetAlgebra s, SetAlgebra t, std::string name) {
  AlgebraHom g;
  g.name = std::move(name);
  g.map.resize(s.alg.size());
  for (int u = 0; u < s.alg.size(); ++u) {
    Bitset pre(f.source.n());
    for (int x = 0; x < f.source.n(); ++x)
      if (s.sets[u].test(f.map[x])) pre.set(x);
    int id = t.index_of(pre);
    if (id < 0)
      throw StructuralError("f⁻¹[" + set_name(f.target.points, s.sets[u]) + "] is not in " +
                            t.alg.name);
    g.map[u] = id;
  }
  g.source = std::move(s.alg);
  g.target = std::move(t.alg);
  return g;
}

}  // namespace

AlgebraHom dual_of_map(const SpaceMap& f, const Limits& lim) {
  return preimage_element_map(f, cob_algebra(f.target, lim), cob_algebra(f.source, lim),
                              "A1(" + (f.name.empty() ? std::string("f") : f.name) + ")");
}

AlgebraHom dual_of_map_ba(const SpaceMap& f, const Limits& lim) {
  return preimage_element_map(f, coreg_algebra(f.target, lim), coreg_algebra(f.source, lim),
                              "G1(" + (f.name.empty() ? std::string("f") : f.name) + ")");
}

namespace {

void check_map_shape(const SpaceMap& f) {
  if (static_cast<int>(f.map.size()) != f.source.n())
    throw StructuralError("the point map is not total on the source");
  for (int id : f.map)
    if (id < 0 || id >= f.target.n())
      throw StructuralError("the point map leaves the target point set");
  if (f.source.dims() != f.target.dims())
    throw StructuralError("source and target have different dimension sets");
}

Bitset map_preimage(const SpaceMap& f, const Bitset& u) {
  Bitset pre(f.source.n());
  for (int x = 0; x < f.source.n(); ++x)
    if (u.test(f.map[x])) pre.set(x);
  return pre;
}

bool in_family(const std::vector<Bitset>& fam, const Bitset& s) {
  return std::binary_search(fam.begin(), fam.end(), s, Bitset::lex_less);
}

}  // namespace

ValidationReport validate_uvo_map(const SpaceMap& f, const Limits& lim) {
  check_map_shape(f);
  const FiniteSpace& X = f.source;
  const FiniteSpace& Xp = f.target;
  if (!X.has_perp() || !Xp.has_perp())
    throw ArgumentError("both spaces of a UVO-map need orthogonality relations");
  ValidationReport rep(f.name.empty() ? std::string("UVO-map") : f.name);

  OpenFamilies famX = open_families(X, lim);
  OpenFamilies famXp = open_families(Xp, lim);

  {
    bool bad = false;
    for (const auto& u : famXp.co)
      if (!in_family(famX.co, map_preimage(f, u))) {
        rep.fail("map.spectral", {set_name(Xp.points, u)},
                 "f⁻¹[" + set_name(Xp.points, u) + "] is not compact open");
        bad = true;
        break;
      }
    if (!bad) rep.pass("map.spectral");
  }
  {
    bool bad = false;
    for (const auto& u : famXp.cob)
      if (!in_family(famX.cob, map_preimage(f, u))) {
        rep.fail("map.cob-preimage", {set_name(Xp.points, u)},
                 "f⁻¹[" + set_name(Xp.points, u) +
                     "] is not compact open biorthogonally closed");
        bad = true;
        break;
      }
    if (!bad) rep.pass("map.cob-preimage");
  }

  {
    bool found = false;
    for (int x = 0; x < X.n() && !found; ++x)
      for (int y = 0; y < X.n() && !found; ++y)
        if (!X.perp[x].test(y) && Xp.perp[f.map[x]].test(f.map[y])) {
          rep.fail("map.perp", {X.points[x], X.points[y]},
                   X.points[x] + " ̸⊥ " + X.points[y] + " but f(" + X.points[x] + ") ⊥ f(" +
                       X.points[y] + ")");
          found = true;
        }
    if (!found) rep.pass("map.perp");
  }

  {
    std::vector<Bitset> upp = specialization_upsets(Xp);
    bool found = false;
    for (int z = 0; z < Xp.n() && !found; ++z)
      for (int y = 0; y < X.n() && !found; ++y) {
        if (Xp.perp[z].test(f.map[y])) continue;
        bool witness = false;
        for (int x = 0; x < X.n() && !witness; ++x)
          if (!X.perp[x].test(y) && upp[z].test(f.map[x])) witness = true;
        if (!witness) {
          rep.fail("map.perp-witness", {Xp.points[z], X.points[y]},
                   Xp.points[z] + " ̸⊥ f(" + X.points[y] + ") but no x with x ̸⊥ " +
                       X.points[y] + " and " + Xp.points[z] + " ⩽ f(x)");
          found = true;
        }
      }
    if (!found) rep.pass("map.perp-witness");
  }

  if (X.dims() > 0) {
    bool bad = false;
    for (int i = 0; i < X.dims() && !bad; ++i)
      for (const auto& u : famXp.cob) {
        Bitset lhs = rel_image(X.rels[i], map_preimage(f, u));
        Bitset rhs = map_preimage(f, rel_image(Xp.rels[i], u));
        if (!(lhs == rhs)) {
          rep.fail("map.rel-commute", {std::to_string(i), set_name(Xp.points, u)},
                   "R" + std::to_string(i) + "[f⁻¹[U]] ≠ f⁻¹[R" + std::to_string(i) +
                       "[U]] at U = " + set_name(Xp.points, u));
          bad = true;
          break;
        }
      }
    if (!bad) rep.pass("map.rel-commute");

    bool badd = false;
    for (int i = 0; i < X.dims() && !badd; ++i)
      for (int k = 0; k < X.dims() && !badd; ++k)
        if (!(map_preimage(f, Xp.deltas[i][k]) == X.deltas[i][k])) {
          rep.fail("map.delta", {std::to_string(i), std::to_string(k)},
                   "f⁻¹[Δ'" + std::to_string(i) + std::to_string(k) + "] ≠ Δ" +
                       std::to_string(i) + std::to_string(k));
          badd = true;
        }
    if (!badd) rep.pass("map.delta");
  }

  return rep;
}

ValidationReport validate_uv_map(const SpaceMap& f, const Limits& lim) {
  check_map_shape(f);
  const FiniteSpace& X = f.source;
  const FiniteSpace& Xp = f.target;
  ValidationReport rep(f.name.empty() ? std::string("UV-map") : f.name);

  OpenFamilies famX = open_families(X, lim);
  OpenFamilies famXp = open_families(Xp, lim);

  {
    bool bad = false;
    for (const auto& u : famXp.co)
      if (!in_family(famX.co, map_preimage(f, u))) {
        rep.fail("map.spectral", {set_name(Xp.points, u)},
                 "f⁻¹[" + set_name(Xp.points, u) + "] is not compact open");
        bad = true;
        break;
      }
    if (!bad) rep.pass("map.spectral");
  }
  {
    bool bad = false;
    for (const auto& u : famXp.coreg)
      if (!in_family(famX.coreg, map_preimage(f, u))) {
        rep.fail("map.coreg-preimage", {set_name(Xp.points, u)},
                 "f⁻¹[" + set_name(Xp.points, u) + "] is not compact open regular open");
        bad = true;
        break;
      }
    if (!bad) rep.pass("map.coreg-preimage");
  }

  {
    std::vector<Bitset> up = specialization_upsets(X);
    std::vector<Bitset> upp = specialization_upsets(Xp);
    bool found = false;
    for (int x = 0; x < X.n() && !found; ++x)
      for (int yp = 0; yp < Xp.n() && !found; ++yp) {
        if (!upp[f.map[x]].test(yp)) continue;
        bool witness = false;
        up[x].for_each([&](int y) {
          if (f.map[y] == yp) witness = true;
        });
        if (!witness) {
          rep.fail("map.lift", {X.points[x], Xp.points[yp]},
                   "f(" + X.points[x] + ") ⩽ " + Xp.points[yp] + " has no lift y ⩾ " +
                       X.points[x] + " with f(y) = " + Xp.points[yp]);
          found = true;
        }
      }
    if (!found) rep.pass("map.lift");
  }

  if (X.dims() > 0) {
    bool bad = false;
    for (int i = 0; i < X.dims() && !bad; ++i)
      for (const auto& u : famXp.coreg) {
        Bitset lhs = rel_image(X.rels[i], map_preimage(f, u));
        Bitset rhs = map_preimage(f, rel_image(Xp.rels[i], u));
        if (!(lhs == rhs)) {
          rep.fail("map.rel-commute", {std::to_string(i), set_name(Xp.points, u)},
                   "S" + std::to_string(i) + "[f⁻¹[U]] ≠ f⁻¹[S" + std::to_string(i) +
                       "[U]] at U = " + set_name(Xp.points, u));
          bad = true;
          break;
        }
      }
    if (!bad) rep.pass("map.rel-commute");

    bool badd = false;
    for (int i = 0; i < X.dims() && !badd; ++i)
      for (int k = 0; k < X.dims() && !badd; ++k)
        if (!(map_preimage(f, Xp.deltas[i][k]) == X.deltas[i][k])) {
          rep.fail("map.delta", {std::to_string(i), std::to_string(k)},
                   "f⁻¹[Δ'" + std::to_string(i) + std::to_string(k) + "] ≠ Δ" +
                       std::to_string(i) + std::to_string(k));
          badd = true;
        }
    if (!badd) rep.pass("map.delta");
  }

  return rep;
}

namespace {

ValidationReport hom_square(const AlgebraHom& h, const SpaceMap& f, const AlgebraHom& hh,
                            const SetAlgebra& CA, const SetAlgebra& CAp, const Limits& lim) {
  ValidationReport rep("φ square for " + (h.name.empty() ? std::string("h") : h.name));
  std::vector<int> phiA = phi_table(h.source, CA, lim);
  std::vector<int> phiAp = phi_table(h.target, CAp, lim);
  (void)f;
  bool found = false;
  for (int a = 0; a < h.source.size() && !found; ++a) {
    int left = phiAp[h.map[a]];
    int right = hh.map[phiA[a]];
    if (left != right) {
      rep.fail("square.hom", {h.source.lat.name(a)},
               "φ′(h(" + h.source.lat.name(a) + ")) = " + CAp.alg.lat.name(left) +
                   " but the double dual sends φ(a) to " + CAp.alg.lat.name(right));
      found = true;
    }
  }
  if (!found) rep.pass("square.hom");
  return rep;
}

ValidationReport map_square(const SpaceMap& f, const AlgebraHom& g, const SpaceMap& ff,
                            const SetAlgebra& CX, const SetAlgebra& CXp, const Limits& lim) {
  ValidationReport rep("ψ square for " + (f.name.empty() ? std::string("f") : f.name));
  (void)g;
  FilterSpectrum sx = enumerate_proper_filters(CX.alg.lat, lim);
  FilterSpectrum sxp = enumerate_proper_filters(CXp.alg.lat, lim);
  std::vector<int> psiX = psi_table(f.source, CX, sx);
  std::vector<int> psiXp = psi_table(f.target, CXp, sxp);
  bool found = false;
  for (int x = 0; x < f.source.n() && !found; ++x) {
    int left = psiXp[f.map[x]];
    int right = ff.map[psiX[x]];
    if (left != right) {
      rep.fail("square.map", {f.source.points[x]},
               "ψ′(f(" + f.source.points[x] + ")) = " + sxp.names[left] +
                   " but the double dual sends ψ(x) to " + sxp.names[right]);
      found = true;
    }
  }
  if (!found) rep.pass("square.map");
  return rep;
}

}  // namespace

ValidationReport verify_hom_square(const AlgebraHom& h, const Limits& lim) {
  SpaceMap f = dual_of_hom(h, lim);
  AlgebraHom hh = dual_of_map(f, lim);
  SetAlgebra CA = cob_algebra(f.target, lim);
  SetAlgebra CAp = cob_algebra(f.source, lim);
  return hom_square(h, f, hh, CA, CAp, lim);
}

ValidationReport verify_hom_square_ba(const AlgebraHom& h, const Limits& lim) {
  SpaceMap f = dual_of_hom_ba(h, lim);
  AlgebraHom hh = dual_of_map_ba(f, lim);
  SetAlgebra CA = coreg_algebra(f.target, lim);
  SetAlgebra CAp = coreg_algebra(f.source, lim);
  return hom_square(h, f, hh, CA, CAp, lim);
}

ValidationReport verify_map_square(const SpaceMap& f, const Limits& lim) {
  AlgebraHom g = dual_of_map(f, lim);
  SpaceMap ff = dual_of_hom(g, lim);
  SetAlgebra CX = cob_algebra(f.source, lim);
  SetAlgebra CXp = cob_algebra(f.target, lim);
  return map_square(f, g, ff, CX, CXp, lim);
}

ValidationReport verify_map_square_ba(const SpaceMap& f, const Limits& lim) {
  AlgebraHom g = dual_of_map_ba(f, lim);
  SpaceMap ff = dual_of_hom_ba(g, lim);
  SetAlgebra CX = coreg_algebra(f.source, lim);
  SetAlgebra CXp = coreg_algebra(f.target, lim);
  return map_square(f, g, ff, CX, CXp, lim);
}

CanonicalCompletion reg_completion_ba(const CylindricOrtholattice& A, const Limits& lim) {
  FiniteSpace X = boolean_spectrum(A, lim);
  OpenFamilies fam = open_families(X, lim);
  SetAlgebra C = family_algebra(X, std::move(fam.reg), "REG(" + X.name + ")", lim);
  std::vector<Bitset> up = specialization_upsets(X);

  const int n = C.alg.size();
  C.alg.ocomp.resize(n);
  for (int a = 0; a < n; ++a)
    C.alg.ocomp[a] = family_lookup(C, upset_star(up, C.sets[a]), "star");
  C.alg.exists.assign(X.dims(), std::vector<int>(n));
  for (int i = 0; i < X.dims(); ++i)
    for (int a = 0; a < n; ++a)
      C.alg.exists[i][a] = family_lookup(C, rel_image(X.rels[i], C.sets[a]), "quantifier");
  C.alg.delta.assign(X.dims(), std::vector<int>(X.dims()));
  for (int i = 0; i < X.dims(); ++i)
    for (int k = 0; k < X.dims(); ++k)
      C.alg.delta[i][k] = family_lookup(C, X.deltas[i][k], "diagonal constant");
  C.alg.boolean_axiom5 = true;

  FilterSpectrum spec = enumerate_proper_filters(A.lat, lim);
  CanonicalCompletion out;
  Embedding& E = out.embedding;
  E.source = A;
  E.target = std::move(C);
  E.point_filters = spec.filters;
  E.track = CompletionTrack::RegUpset;
  E.up_rows = std::move(up);
  std::vector<Bitset> sets = phi_sets(A, spec);
  E.phi.resize(A.size());
  for (int a = 0; a < A.size(); ++a) {
    int id = E.target.index_of(sets[a]);
    if (id < 0)
      throw StructuralError("the image of " + A.lat.name(a) +
                            " is not regular open in the Boolean spectrum");
    E.phi[a] = id;
  }
  E.closed_k = image_meet_closure(E.target.alg.lat, E.phi);

  ValidationReport rep("regular-open completion of " + algebra_name(A));
  rep.append(verify_embedding(E));
  rep.append(verify_dense(E));
  rep.append(verify_compact(E, lim));
  rep.merge("target", validate_cylindric(E.target.alg));
  out.certificates = std::move(rep);
  return out;
}

CoincidenceResult coincidence_families(const CylindricOrtholattice& A, const Limits& lim) {
  CoincidenceResult r;
  CylindricOrthoFrame fr = goldblatt_frame(A, lim);
  r.point_names = fr.points;
  r.bclosed = enumerate_bclosed(fr, lim);

  FilterSpectrum spec = enumerate_proper_filters(A.lat, lim);
  const int n = spec.size();
  if (n > 62 || (std::uint64_t{1} << n) > lim.max_scan)
    throw ResourceGuardError("the regular-open scan over 2^" + std::to_string(n) +
                                 " subsets exceeds the scan guard",
                             lim.max_scan);
  std::vector<Bitset> up(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (spec.filters[x].subset_of(spec.filters[y])) up[x].set(y);

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Bitset u(n);
    for (int x = 0; x < n; ++x)
      if ((mask >> x) & 1) u.set(x);
    if (upset_star(up, upset_star(up, u)) == u) r.regs.push_back(u);
  }
  std::sort(r.regs.begin(), r.regs.end(), Bitset::lex_less);
  r.equal = r.bclosed == r.regs;
  return r;
}

ValidationReport check_coincidence(const CylindricOrtholattice& A, const Limits& lim) {
  DistributivityResult d = is_distributive(A);
  if (!d.distributive)
    throw ContractError("the coincidence claim is made for Boolean algebras; " +
                        algebra_name(A) + " is not distributive (witness " +
                        A.lat.name(d.witness[0]) + ", " + A.lat.name(d.witness[1]) + ", " +
                        A.lat.name(d.witness[2]) + ")");
  CoincidenceResult r = coincidence_families(A, lim);
  ValidationReport rep("coincidence over the proper filters of " + algebra_name(A));
  if (r.equal) {
    rep.pass("coincide.families", "both families have " + std::to_string(r.bclosed.size()) +
                                      " members and coincide");
  } else {
    // Lex-least member of the symmetric difference.
    Bitset w(r.point_names.size());
    bool have = false;
    for (const auto& s : r.bclosed)
      if (!std::binary_search(r.regs.begin(), r.regs.end(), s, Bitset::lex_less)) {
        if (!have || Bitset::lex_less(s, w)) w = s;
        have = true;
      }
    for (const auto& s : r.regs)
      if (!std::binary_search(r.bclosed.begin(), r.bclosed.end(), s, Bitset::lex_less)) {
        if (!have || Bitset::lex_less(s, w)) w = s;
        have = true;
      }
    rep.fail("coincide.families", {set_name(r.point_names, w)},
             "biorthogonally closed family has " + std::to_string(r.bclosed.size()) +
                 " members, regular-open family has " + std::to_string(r.regs.size()) +
                 "; first differing set " + set_name(r.point_names, w));
  }
  return rep;
}

}  // namespace cylo
