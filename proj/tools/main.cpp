// Command-line front end: validate documents, enumerate filters, apply the
// dual functors, and run the completion and coincidence checks on concrete
// finite instances.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cylo/catalog.hpp"
#include "cylo/completion.hpp"
#include "cylo/document.hpp"
#include "cylo/dot.hpp"
#include "cylo/duality.hpp"
#include "cylo/filters.hpp"
#include "cylo/render.hpp"

namespace {

using namespace cylo;

struct Common {
  bool json = false;
  std::string out;
  std::size_t max_size = 0;
  std::vector<std::string> files;
};

void add_common(CLI::App* sub, Common& c, bool with_files = true) {
  sub->add_flag("--json", c.json, "machine-readable output");
  sub->add_option("--out", c.out, "write the output to this file instead of stdout");
  sub->add_option("--max-size", c.max_size,
                  "cap enumerated families, derived carriers, and brute-force scans "
                  "(overrides CYLO_MAX_SIZE)");
  if (with_files) sub->add_option("files", c.files, "input documents");
}

Limits make_limits(const Common& c) {
  std::size_t v = c.max_size;
  if (v == 0)
    if (const char* env = std::getenv("CYLO_MAX_SIZE")) v = std::strtoull(env, nullptr, 10);
  Limits lim;
  if (v > 0) {
    lim.max_family = v;
    lim.max_lattice = v;
    lim.max_scan = v;
  }
  return lim;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ArgumentError("cannot write " + c.out);
  f << text;
}

std::string render(const Common& c, const ValidationReport& rep) {
  return c.json ? render_json(rep) : render_text(rep);
}

const CylindricOrtholattice& as_algebra(const Document& doc, const char* op) {
  if (const auto* A = std::get_if<CylindricOrtholattice>(&doc)) return *A;
  throw ArgumentError(std::string(op) + " expects an algebra document, got " + kind_of(doc));
}

ValidationReport validate_any(const Document& doc, const Limits& lim) {
  struct Visitor {
    const Limits& lim;
    ValidationReport operator()(const CylindricOrtholattice& A) const {
      return validate_cylindric(A);
    }
    ValidationReport operator()(const CylindricOrthoFrame& X) const { return validate_frame(X); }
    ValidationReport operator()(const FiniteSpace& X) const {
      return X.has_perp() ? validate_uvo(X, lim) : validate_uv(X, lim);
    }
    ValidationReport operator()(const AlgebraHom& h) const { return validate_homomorphism(h); }
    ValidationReport operator()(const SpaceMap& f) const {
      return f.source.has_perp() ? validate_uvo_map(f, lim) : validate_uv_map(f, lim);
    }
  };
  return std::visit(Visitor{lim}, doc);
}

int run_validate(const Common& c, bool seed_catalog) {
  Limits lim = make_limits(c);
  std::vector<Document> docs;
  for (const auto& path : c.files) docs.push_back(load_document(path, lim));
  if (seed_catalog) {
    for (const auto& name : catalog_names()) docs.emplace_back(catalog_algebra(name));
    for (const auto& name : catalog_hom_names()) docs.emplace_back(catalog_hom(name));
  }
  if (docs.empty()) throw ArgumentError("nothing to validate; give documents or --seed-catalog");

  std::string out;
  bool all_ok = true;
  for (const auto& doc : docs) {
    ValidationReport rep = validate_any(doc, lim);
    all_ok = all_ok && rep.ok();
    out += render(c, rep);
  }
  emit(c, out);
  return all_ok ? 0 : 1;
}

int run_filters(const Common& c) {
  Limits lim = make_limits(c);
  if (c.files.size() != 1) throw ArgumentError("filters expects exactly one algebra document");
  Document doc = load_document(c.files[0], lim);
  const CylindricOrtholattice& A = as_algebra(doc, "filters");
  FilterSpectrum spec = enumerate_proper_filters(A.lat, lim);
  emit(c, c.json ? render_json(A.lat, spec) : render_text(A.lat, spec));
  return 0;
}

std::string space_summary(const FiniteSpace& X, const Limits& lim) {
  OpenFamilies fam = open_families(X, lim);
  std::ostringstream out;
  out << X.name << ": " << X.n() << " points, " << X.basis.size() << " basic opens, "
      << X.opens.size() << " opens\n";
  out << "compact opens " << fam.co.size();
  if (X.has_perp()) out << ", compact open biorthogonally closed " << fam.cob.size();
  out << ", regular " << fam.reg.size() << ", compact regular " << fam.coreg.size() << "\n";
  out << "points:";
  for (const auto& p : X.points) out << " " << p;
  out << "\n";
  return out.str();
}

int run_spectrum(const Common& c, bool boolean) {
  Limits lim = make_limits(c);
  if (c.files.size() != 1) throw ArgumentError("spectrum expects exactly one algebra document");
  Document doc = load_document(c.files[0], lim);
  const CylindricOrtholattice& A = as_algebra(doc, "spectrum");
  FiniteSpace X = boolean ? boolean_spectrum(A, lim) : spectrum_space(A, lim);
  emit(c, c.json ? to_json(X) : space_summary(X, lim));
  return 0;
}

int run_complete(const Common& c, bool boolean) {
  Limits lim = make_limits(c);
  if (c.files.size() != 1) throw ArgumentError("complete expects exactly one algebra document");
  Document doc = load_document(c.files[0], lim);
  const CylindricOrtholattice& A = as_algebra(doc, "complete");
  CanonicalCompletion comp = boolean ? reg_completion_ba(A, lim) : canonical_completion(A, lim);
  CanonicalExtensionOps ops = canonical_extension_ops(comp.embedding);
  std::string out = render(c, comp.certificates) + render(c, ops.agreement);
  emit(c, out);
  return comp.certificates.ok() && ops.agreement.ok() ? 0 : 1;
}

int run_dualize(const Common& c, bool boolean) {
  Limits lim = make_limits(c);
  if (c.files.size() != 1) throw ArgumentError("dualize expects exactly one document");
  Document doc = load_document(c.files[0], lim);
  struct Visitor {
    const Limits& lim;
    bool boolean;
    std::string operator()(const CylindricOrtholattice& A) const {
      return to_json(boolean ? boolean_spectrum(A, lim) : spectrum_space(A, lim));
    }
    std::string operator()(const FiniteSpace& X) const {
      return to_json(boolean ? coreg_algebra(X, lim).alg : cob_algebra(X, lim).alg);
    }
    std::string operator()(const AlgebraHom& h) const {
      return to_json(boolean ? dual_of_hom_ba(h, lim) : dual_of_hom(h, lim));
    }
    std::string operator()(const SpaceMap& f) const {
      return to_json(boolean ? dual_of_map_ba(f, lim) : dual_of_map(f, lim));
    }
    std::string operator()(const CylindricOrthoFrame&) const {
      throw ArgumentError("dualize expects an algebra, space, hom, or map document");
    }
  };
  emit(c, std::visit(Visitor{lim, boolean}, doc));
  return 0;
}

int run_roundtrip(const Common& c, bool boolean) {
  Limits lim = make_limits(c);
  if (c.files.size() != 1) throw ArgumentError("roundtrip expects exactly one document");
  Document doc = load_document(c.files[0], lim);
  ValidationReport rep;
  if (const auto* A = std::get_if<CylindricOrtholattice>(&doc)) {
    IsoCertificate cert =
        boolean ? verify_representation_ba(*A, lim) : verify_representation_ol(*A, lim);
    rep = cert.report;
  } else if (const auto* X = std::get_if<FiniteSpace>(&doc)) {
    HomeoCertificate cert =
        boolean ? verify_realization_ba(*X, lim) : verify_realization_ol(*X, lim);
    rep = cert.report;
  } else {
    throw ArgumentError(std::string("roundtrip expects an algebra or space document, got ") +
                        kind_of(doc));
  }
  emit(c, render(c, rep));
  return rep.ok() ? 0 : 1;
}

int run_hom_dual(const Common& c, bool boolean) {
  Limits lim = make_limits(c);
  if (c.files.size() != 1) throw ArgumentError("hom-dual expects exactly one hom or map document");
  Document doc = load_document(c.files[0], lim);
  std::string out;
  bool ok = true;
  if (const auto* h = std::get_if<AlgebraHom>(&doc)) {
    SpaceMap f = boolean ? dual_of_hom_ba(*h, lim) : dual_of_hom(*h, lim);
    ValidationReport dual = boolean ? validate_uv_map(f, lim) : validate_uvo_map(f, lim);
    ValidationReport square = boolean ? verify_hom_square_ba(*h, lim) : verify_hom_square(*h, lim);
    out = render(c, dual) + render(c, square);
    ok = dual.ok() && square.ok();
  } else if (const auto* f = std::get_if<SpaceMap>(&doc)) {
    AlgebraHom g = boolean ? dual_of_map_ba(*f, lim) : dual_of_map(*f, lim);
    ValidationReport dual = validate_homomorphism(g);
    ValidationReport square = boolean ? verify_map_square_ba(*f, lim) : verify_map_square(*f, lim);
    out = render(c, dual) + render(c, square);
    ok = dual.ok() && square.ok();
  } else {
    throw ArgumentError(std::string("hom-dual expects a hom or map document, got ") +
                        kind_of(doc));
  }
  emit(c, out);
  return ok ? 0 : 1;
}

int run_coincide(const Common& c, bool seed_catalog) {
  Limits lim = make_limits(c);
  std::vector<CylindricOrtholattice> algebras;
  for (const auto& path : c.files)
    algebras.push_back(as_algebra(load_document(path, lim), "coincide"));
  if (seed_catalog)
    for (const auto& name : catalog_names()) algebras.push_back(catalog_algebra(name));
  if (algebras.empty())
    throw ArgumentError("nothing to check; give algebra documents or --seed-catalog");

  std::string out;
  bool all_ok = true;
  for (const auto& A : algebras) {
    DistributivityResult d = is_distributive(A);
    if (d.distributive) {
      ValidationReport rep = check_coincidence(A, lim);
      all_ok = all_ok && rep.ok();
      out += render(c, rep);
    } else {
      // Outside the coincidence theorem's hypothesis: record both family
      // sizes without making a claim.
      CoincidenceResult r = coincidence_families(A, lim);
      ValidationReport rep("coincidence over the proper filters of " + A.name);
      rep.pass("coincide.skipped",
               A.name + " is not distributive (witness " + A.lat.name(d.witness[0]) + ", " +
                   A.lat.name(d.witness[1]) + ", " + A.lat.name(d.witness[2]) +
                   "); biorthogonally closed family has " + std::to_string(r.bclosed.size()) +
                   " members, regular-open family has " + std::to_string(r.regs.size()) +
                   "; the families " + (r.equal ? "coincide" : "differ"));
      out += render(c, rep);
    }
  }
  emit(c, out);
  return all_ok ? 0 : 1;
}

int run_dot(const Common& c) {
  Limits lim = make_limits(c);
  if (c.files.size() != 1) throw ArgumentError("dot expects exactly one document");
  Document doc = load_document(c.files[0], lim);
  struct Visitor {
    std::string operator()(const CylindricOrtholattice& A) const { return to_dot(A); }
    std::string operator()(const CylindricOrthoFrame& X) const { return to_dot(X); }
    std::string operator()(const FiniteSpace& X) const { return to_dot(X); }
    std::string operator()(const AlgebraHom&) const {
      throw ArgumentError("no DOT rendering for hom documents");
    }
    std::string operator()(const SpaceMap&) const {
      throw ArgumentError("no DOT rendering for map documents");
    }
  };
  emit(c, std::visit(Visitor{}, doc));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite workbench for cylindric ortholattices, Goldblatt frames, and their duals"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);
  app.set_version_flag("--version", "cylo 0.1.0");

  Common c_validate, c_filters, c_spectrum, c_complete, c_dualize, c_roundtrip, c_homdual,
      c_coincide, c_dot;
  bool seed_validate = false, seed_coincide = false;
  bool bool_spectrum = false, bool_complete = false, bool_dualize = false, bool_roundtrip = false,
       bool_homdual = false;

  CLI::App* validate =
      app.add_subcommand("validate", "run the axiom battery for each input document");
  add_common(validate, c_validate);
  validate->add_flag("--seed-catalog", seed_validate, "also validate the built-in catalog");

  CLI::App* filters = app.add_subcommand("filters", "enumerate the proper filters of an algebra");
  add_common(filters, c_filters);

  CLI::App* spectrum = app.add_subcommand("spectrum", "dual space of an algebra");
  add_common(spectrum, c_spectrum);
  spectrum->add_flag("--boolean", bool_spectrum, "Boolean track (equivalence spectrum)");

  CLI::App* complete =
      app.add_subcommand("complete", "canonical completion with density/compactness certificates");
  add_common(complete, c_complete);
  complete->add_flag("--boolean", bool_complete, "Boolean track (regular-open completion)");

  CLI::App* dualize = app.add_subcommand("dualize", "apply the dual functor, emitting a document");
  add_common(dualize, c_dualize);
  dualize->add_flag("--boolean", bool_dualize, "Boolean track functors");

  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "double-dual certificate for an algebra or space");
  add_common(roundtrip, c_roundtrip);
  roundtrip->add_flag("--boolean", bool_roundtrip, "Boolean track");

  CLI::App* homdual =
      app.add_subcommand("hom-dual", "dualize a hom or map and verify the commuting square");
  add_common(homdual, c_homdual);
  homdual->add_flag("--boolean", bool_homdual, "Boolean track");

  CLI::App* coincide = app.add_subcommand(
      "coincide", "compare biorthogonally closed and regular-open families over the filters");
  add_common(coincide, c_coincide);
  coincide->add_flag("--seed-catalog", seed_coincide, "also check the built-in catalog");

  CLI::App* dot = app.add_subcommand("dot", "Graphviz rendering of a document");
  add_common(dot, c_dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return run_validate(c_validate, seed_validate);
    if (*filters) return run_filters(c_filters);
    if (*spectrum) return run_spectrum(c_spectrum, bool_spectrum);
    if (*complete) return run_complete(c_complete, bool_complete);
    if (*dualize) return run_dualize(c_dualize, bool_dualize);
    if (*roundtrip) return run_roundtrip(c_roundtrip, bool_roundtrip);
    if (*homdual) return run_hom_dual(c_homdual, bool_homdual);
    if (*coincide) return run_coincide(c_coincide, seed_coincide);
    if (*dot) return run_dot(c_dot);
  } catch (const ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
