// Line-oriented text formats: `.alg` for bound quiver presentations and
// `.mod` for modules given by per-vertex dimensions and arrow matrices.
// Parse errors carry 1-based line numbers.
#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "tautilt/module.hpp"

namespace tautilt {

struct AlgebraFile {
  unsigned prime = 2;
  std::string name;
  QuiverPresentation pres;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline int parse_int(const std::string& s, const std::string& file, int lineno,
                     const std::string& what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(file, lineno, "expected an integer for " + what + ", got '" + s + "'");
  return v;
}

}  // namespace detail

/// Parses the `.alg` format:
///   field p=<prime>
///   vertices <labels...>
///   arrow <name> <src> <tgt>
///   relation <c1> <path1> [+ <c2> <path2> ...]   (paths like "b*a", right-to-left)
///   nilpotency <L>
inline AlgebraFile parse_algebra_file(const std::string& text, const std::string& filename) {
  AlgebraFile out;
  out.name = filename;
  bool saw_vertices = false, saw_nilpotency = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto vertex_index = [&](const std::string& label, int ln) {
    for (size_t v = 0; v < out.pres.vertices.size(); ++v)
      if (out.pres.vertices[v] == label) return static_cast<int>(v);
    throw ParseError(filename, ln, "unknown vertex '" + label + "'");
  };
  auto arrow_index = [&](const std::string& name, int ln) {
    for (size_t a = 0; a < out.pres.arrows.size(); ++a)
      if (out.pres.arrows[a].name == name) return static_cast<int>(a);
    throw ParseError(filename, ln, "unknown arrow '" + name + "'");
  };
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = detail::split_ws(detail::strip_comment(raw));
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "field") {
      if (toks.size() != 2 || toks[1].rfind("p=", 0) != 0)
        throw ParseError(filename, lineno, "expected 'field p=<prime>'");
      out.prime = static_cast<unsigned>(
          detail::parse_int(toks[1].substr(2), filename, lineno, "field characteristic"));
      if (!is_prime(out.prime))
        throw ParseError(filename, lineno, "field characteristic must be prime");
    } else if (kw == "name") {
      if (toks.size() != 2) throw ParseError(filename, lineno, "expected 'name <label>'");
      out.name = toks[1];
    } else if (kw == "vertices") {
      if (toks.size() < 2) throw ParseError(filename, lineno, "expected at least one vertex");
      out.pres.vertices.assign(toks.begin() + 1, toks.end());
      saw_vertices = true;
    } else if (kw == "arrow") {
      if (!saw_vertices) throw ParseError(filename, lineno, "arrow before vertices");
      if (toks.size() != 4) throw ParseError(filename, lineno, "expected 'arrow <name> <src> <tgt>'");
      out.pres.arrows.push_back(
          ArrowSpec{toks[1], vertex_index(toks[2], lineno), vertex_index(toks[3], lineno)});
    } else if (kw == "relation") {
      Relation rel;
      size_t at = 1;
      while (at < toks.size()) {
        if (at + 1 >= toks.size())
          throw ParseError(filename, lineno, "relation term needs '<coeff> <path>'");
        RelationTerm term;
        term.coeff = detail::parse_int(toks[at], filename, lineno, "relation coefficient");
        // path "b*a" composes right-to-left; store in application order
        std::vector<std::string> names;
        {
          std::string path = toks[at + 1], piece;
          std::istringstream ps(path);
          while (std::getline(ps, piece, '*')) {
            if (piece.empty()) throw ParseError(filename, lineno, "malformed path '" + path + "'");
            names.push_back(piece);
          }
        }
        for (auto it = names.rbegin(); it != names.rend(); ++it)
          term.arrows.push_back(arrow_index(*it, lineno));
        rel.push_back(std::move(term));
        at += 2;
        if (at < toks.size()) {
          if (toks[at] != "+") throw ParseError(filename, lineno, "expected '+' between terms");
          ++at;
        }
      }
      if (rel.empty()) throw ParseError(filename, lineno, "empty relation");
      out.pres.relations.push_back(std::move(rel));
    } else if (kw == "nilpotency") {
      if (toks.size() != 2) throw ParseError(filename, lineno, "expected 'nilpotency <L>'");
      out.pres.nilpotency = detail::parse_int(toks[1], filename, lineno, "nilpotency bound");
      saw_nilpotency = true;
    } else {
      throw ParseError(filename, lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_vertices) throw ParseError(filename, lineno, "missing 'vertices' line");
  if (!saw_nilpotency) throw ParseError(filename, lineno, "missing 'nilpotency' line");
  return out;
}

inline std::string write_algebra_file(const AlgebraFile& f) {
  std::ostringstream out;
  out << "name " << f.name << "\n";
  out << "field p=" << f.prime << "\n";
  out << "vertices";
  for (const auto& v : f.pres.vertices) out << " " << v;
  out << "\n";
  for (const auto& a : f.pres.arrows)
    out << "arrow " << a.name << " " << f.pres.vertices[static_cast<size_t>(a.src)] << " "
        << f.pres.vertices[static_cast<size_t>(a.tgt)] << "\n";
  for (const auto& rel : f.pres.relations) {
    out << "relation";
    bool first = true;
    for (const auto& term : rel) {
      if (!first) out << " +";
      first = false;
      out << " " << term.coeff << " ";
      for (auto it = term.arrows.rbegin(); it != term.arrows.rend(); ++it) {
        if (it != term.arrows.rbegin()) out << "*";
        out << f.pres.arrows[static_cast<size_t>(*it)].name;
      }
    }
    out << "\n";
  }
  out << "nilpotency " << f.pres.nilpotency << "\n";
  return out.str();
}

struct ModuleFile {
  std::string name;
  std::string algebra_name;
  std::vector<Index> vdims;
  std::vector<Mat<int>> arrow_entries;  // raw integers, reduced at build time
};

inline Index vdims_rows(const QuiverPresentation& pres, int arrow, const std::vector<Index>& vdims) {
  return vdims[static_cast<size_t>(pres.arrows[static_cast<size_t>(arrow)].tgt)];
}

/// Parses the `.mod` format:
///   module <name> over <algebra-name>
///   dim <vertex>=<d> ...
///   matrix <arrow> = [r1c1 r1c2 ; r2c1 ...]   (rows = target dimension)
inline ModuleFile parse_module_file(const std::string& text, const std::string& filename,
                                    const QuiverPresentation& pres) {
  ModuleFile out;
  out.vdims.assign(pres.vertices.size(), 0);
  std::vector<bool> matrix_seen(pres.arrows.size(), false);
  out.arrow_entries.resize(pres.arrows.size());
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_module = false, saw_dim = false;
  while (std::getline(in, raw)) {
    ++lineno;
    auto clean = detail::strip_comment(raw);
    auto toks = detail::split_ws(clean);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "module") {
      if (toks.size() != 4 || toks[2] != "over")
        throw ParseError(filename, lineno, "expected 'module <name> over <algebra>'");
      out.name = toks[1];
      out.algebra_name = toks[3];
      saw_module = true;
    } else if (kw == "dim") {
      for (size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos)
          throw ParseError(filename, lineno, "expected '<vertex>=<d>' in dim line");
        const std::string label = toks[i].substr(0, eq);
        int found = -1;
        for (size_t v = 0; v < pres.vertices.size(); ++v)
          if (pres.vertices[v] == label) found = static_cast<int>(v);
        if (found < 0) throw ParseError(filename, lineno, "unknown vertex '" + label + "'");
        out.vdims[static_cast<size_t>(found)] = detail::parse_int(
            toks[i].substr(eq + 1), filename, lineno, "vertex dimension");
      }
      saw_dim = true;
    } else if (kw == "matrix") {
      auto eqpos = clean.find('=');
      if (toks.size() < 3 || eqpos == std::string::npos)
        throw ParseError(filename, lineno, "expected 'matrix <arrow> = [...]'");
      int arrow = -1;
      for (size_t a = 0; a < pres.arrows.size(); ++a)
        if (pres.arrows[a].name == toks[1]) arrow = static_cast<int>(a);
      if (arrow < 0) throw ParseError(filename, lineno, "unknown arrow '" + toks[1] + "'");
      auto lb = clean.find('[', eqpos);
      auto rb = clean.find(']', eqpos);
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError(filename, lineno, "matrix entries must be enclosed in [...]");
      std::string body = clean.substr(lb + 1, rb - lb - 1);
      std::vector<std::vector<int>> rows{{}};
      for (const auto& tok : detail::split_ws([&] {
             std::string spaced;
             for (char c : body) spaced += (c == ';') ? std::string(" ; ") : std::string(1, c);
             return spaced;
           }())) {
        if (tok == ";")
          rows.emplace_back();
        else
          rows.back().push_back(detail::parse_int(tok, filename, lineno, "matrix entry"));
      }
      const Index r = vdims_rows(pres, arrow, out.vdims);
      const Index c = out.vdims[static_cast<size_t>(pres.arrows[static_cast<size_t>(arrow)].src)];
      if (r == 0 || c == 0) {
        bool any = false;
        for (const auto& row : rows) any = any || !row.empty();
        if (any)
          throw ParseError(filename, lineno,
                           "matrix for '" + toks[1] + "' must be empty (a dimension is zero)");
        out.arrow_entries[static_cast<size_t>(arrow)] = Mat<int>(r, c);
      } else {
        if (static_cast<Index>(rows.size()) != r)
          throw ParseError(filename, lineno, "matrix for '" + toks[1] + "' needs " +
                                                 std::to_string(r) + " rows (target dimension)");
        Mat<int> m(r, c);
        for (Index i = 0; i < r; ++i) {
          if (static_cast<Index>(rows[static_cast<size_t>(i)].size()) != c)
            throw ParseError(filename, lineno, "matrix row " + std::to_string(i + 1) + " needs " +
                                                   std::to_string(c) + " entries");
          for (Index j = 0; j < c; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        out.arrow_entries[static_cast<size_t>(arrow)] = std::move(m);
      }
      matrix_seen[static_cast<size_t>(arrow)] = true;
    } else {
      throw ParseError(filename, lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_module) throw ParseError(filename, lineno, "missing 'module' line");
  if (!saw_dim) throw ParseError(filename, lineno, "missing 'dim' line");
  for (size_t a = 0; a < pres.arrows.size(); ++a) {
    const Index r = vdims_rows(pres, static_cast<int>(a), out.vdims);
    const Index c = out.vdims[static_cast<size_t>(pres.arrows[a].src)];
    if (!matrix_seen[a]) {
      if (r > 0 && c > 0)
        throw ParseError(filename, lineno, "missing matrix for arrow '" + pres.arrows[a].name + "'");
      out.arrow_entries[a] = Mat<int>(r, c);
    }
  }
  return out;
}

template <class S>
Module<S> module_from_file(const AlgebraPtr<S>& alg, const ModuleFile& f) {
  std::vector<Mat<S>> arrow_mats;
  for (const auto& raw : f.arrow_entries) {
    Mat<S> m(raw.rows(), raw.cols());
    for (Index i = 0; i < raw.rows(); ++i)
      for (Index j = 0; j < raw.cols(); ++j) m(i, j) = S(raw(i, j));
    arrow_mats.push_back(std::move(m));
  }
  return module_from_representation(alg, f.vdims, arrow_mats, Check::Full);
}

/// Serializes a module over a quiver-presented algebra in `.mod` form, first
/// changing to a vertex-graded basis. Modules over algebras without a
/// presentation get a generic listing with one matrix per basis element.
template <class S>
std::string write_module_file(const Module<S>& m, const std::string& name,
                              const std::string& algebra_name) {
  std::ostringstream out;
  out << "module " << name << " over " << algebra_name << "\n";
  const Algebra<S>& a = *m.alg;
  if (a.presentation && m.side == Side::Left) {
    const QuiverPresentation& q = *a.presentation;
    // vertex-graded change of basis from the idempotent projectors
    std::vector<Mat<S>> vbases;
    Index total = 0;
    std::vector<Index> vdims, offsets{0};
    for (const auto& e : a.idempotents) {
      Subspace<S> img = image(action_of_element(m, e));
      vdims.push_back(img.dim());
      total += img.dim();
      offsets.push_back(total);
      vbases.push_back(img.basis().transpose());
    }
    Mat<S> cb(m.dim, total);
    for (size_t v = 0; v < vbases.size(); ++v)
      cb.block(0, offsets[v], m.dim, vbases[v].cols()) = vbases[v];
    Mat<S> cbi = inverse_of(cb);
    out << "dim";
    for (size_t v = 0; v < q.vertices.size(); ++v) out << " " << q.vertices[v] << "=" << vdims[v];
    out << "\n";
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
      // locate the arrow's basis element
      Index arrow_elt = -1;
      for (size_t b = 0; b < a.basis_paths.size(); ++b)
        if (a.basis_paths[b].arrows.size() == 1 &&
            a.basis_paths[b].arrows[0] == static_cast<int>(ai))
          arrow_elt = static_cast<Index>(b);
      const int src = q.arrows[ai].src, tgt = q.arrows[ai].tgt;
      if (vdims[static_cast<size_t>(tgt)] == 0 || vdims[static_cast<size_t>(src)] == 0) continue;
      out << "matrix " << q.arrows[ai].name << " = [";
      Mat<S> act = arrow_elt < 0
                       ? Mat<S>(Mat<S>::Zero(m.dim, m.dim))
                       : Mat<S>(cbi * m.act[static_cast<size_t>(arrow_elt)] * cb);
      for (Index r = 0; r < vdims[static_cast<size_t>(tgt)]; ++r) {
        if (r > 0) out << " ;";
        for (Index c = 0; c < vdims[static_cast<size_t>(src)]; ++c)
          out << " " << act(offsets[static_cast<size_t>(tgt)] + r, offsets[static_cast<size_t>(src)] + c);
      }
      out << " ]\n";
    }
  } else {
    out << "# generic module listing (no quiver presentation): one matrix per basis element\n";
    out << "dim total=" << m.dim << "\n";
    for (Index b = 0; b < a.dim; ++b) {
      out << "matrix " << a.basis_labels[static_cast<size_t>(b)] << " = [";
      for (Index r = 0; r < m.dim; ++r) {
        if (r > 0) out << " ;";
        for (Index c = 0; c < m.dim; ++c) out << " " << m.act[static_cast<size_t>(b)](r, c);
      }
      out << " ]\n";
    }
  }
  return out.str();
}

}  // namespace tautilt
