#include "cylo/dot.hpp"

#include <sstream>

namespace cylo {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void emit_delta_tags(std::ostringstream& out, const std::vector<std::string>& names,
                     const std::vector<std::vector<Bitset>>& deltas, const std::string& prefix) {
  const int m = static_cast<int>(deltas.size());
  const int n = static_cast<int>(names.size());
  for (int x = 0; x < n; ++x) {
    std::string tags;
    for (int i = 0; i < m; ++i)
      for (int k = i + 1; k < m; ++k)
        if (deltas[i][k].test(x)) {
          if (!tags.empty()) tags += ' ';
          tags += "Δ" + std::to_string(i) + std::to_string(k);
        }
    out << "  " << prefix << x << " [label=\"" << escape(names[x]) << "\"";
    if (!tags.empty()) out << ", xlabel=\"" << tags << "\"";
    out << "];\n";
  }
}

void emit_relations(std::ostringstream& out, const std::vector<std::vector<Bitset>>& rels,
                    const char* relname, const std::string& prefix) {
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t x = 0; x < rels[i].size(); ++x)
      rels[i][x].for_each([&](int y) {
        if (static_cast<int>(x) == y) return;  // reflexive closure is implicit
        out << "  " << prefix << x << " -> " << prefix << y << " [label=\"" << relname << i
            << "\", color=\"" << (i % 2 ? "steelblue" : "black") << "\"];\n";
      });
}

void emit_perp(std::ostringstream& out, const std::vector<Bitset>& perp, const std::string& prefix) {
  for (std::size_t x = 0; x < perp.size(); ++x)
    perp[x].for_each([&](int y) {
      if (static_cast<int>(x) < y)
        out << "  " << prefix << x << " -> " << prefix << y
            << " [style=dashed, dir=none, constraint=false];\n";
    });
}

}  // namespace

std::string to_dot(const CylindricOrtholattice& A) {
  std::ostringstream out;
  out << "digraph \"" << escape(A.name) << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  std::string label = A.name;
  for (int i = 0; i < A.dims(); ++i)
    for (int k = i + 1; k < A.dims(); ++k)
      label += "\\nδ" + std::to_string(i) + std::to_string(k) + " = " +
               A.lat.name(A.delta[i][k]);
  out << "  label=\"" << escape(label) << "\";\n";
  for (int a = 0; a < A.size(); ++a)
    out << "  e" << a << " [label=\"" << escape(A.lat.name(a)) << "\"];\n";
  for (auto [a, b] : A.lat.cover_pairs()) out << "  e" << a << " -> e" << b << ";\n";
  for (int a = 0; a < A.size(); ++a)
    if (a < A.comp(a))
      out << "  e" << a << " -> e" << A.comp(a)
          << " [style=dashed, dir=none, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const CylindricOrthoFrame& X) {
  std::ostringstream out;
  out << "digraph \"" << escape(X.name) << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse];\n";
  out << "  label=\"" << escape(X.name) << "\";\n";
  out << "  forcelabels=true;\n";
  emit_delta_tags(out, X.points, X.deltas, "p");
  emit_relations(out, X.rels, "R", "p");
  emit_perp(out, X.perp, "p");
  out << "}\n";
  return out.str();
}

std::string to_dot(const FiniteSpace& X) {
  std::ostringstream out;
  out << "digraph \"" << escape(X.name) << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse];\n";
  out << "  label=\"" << escape(X.name) << " (" << X.n() << " points, " << X.basis.size()
      << " basic opens, " << X.opens.size() << " opens)\";\n";
  out << "  forcelabels=true;\n";
  emit_delta_tags(out, X.points, X.deltas, "p");

  // Covers of the specialization order.
  std::vector<Bitset> up = specialization_upsets(X);
  const int n = X.n();
  for (int x = 0; x < n; ++x)
    up[x].for_each([&](int y) {
      if (x == y) return;
      bool cover = true;
      up[x].for_each([&](int z) {
        if (z != x && z != y && up[z].test(y) && !up[y].test(z)) cover = false;
      });
      if (cover) out << "  p" << x << " -> p" << y << " [style=bold];\n";
    });

  emit_relations(out, X.rels, X.has_perp() ? "R" : "S", "p");
  if (X.has_perp()) emit_perp(out, X.perp, "p");
  out << "}\n";
  return out.str();
}

}  // namespace cylo
