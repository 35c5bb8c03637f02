#include "deltaring/path_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "deltaring/unit_group.hpp"

namespace deltaring {

namespace {

// Returns a directed cycle as a vertex sequence, or empty if acyclic.
std::vector<int> find_cycle(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> out;
  out.resize(static_cast<size_t>(vertices));
  for (const auto& [s, t] : edges) out[size_t(s)].push_back(t);
  std::vector<int> state(size_t(vertices), 0);  // 0 new, 1 open, 2 done
  std::vector<int> stack, pos_in_stack(size_t(vertices), -1);
  std::vector<int> cycle;

  auto dfs = [&](auto&& self, int v) -> bool {
    state[size_t(v)] = 1;
    pos_in_stack[size_t(v)] = int(stack.size());
    stack.push_back(v);
    for (int w : out[size_t(v)]) {
      if (state[size_t(w)] == 1) {
        cycle.assign(stack.begin() + pos_in_stack[size_t(w)], stack.end());
        cycle.push_back(w);
        return true;
      }
      if (state[size_t(w)] == 0 && self(self, w)) return true;
    }
    stack.pop_back();
    pos_in_stack[size_t(v)] = -1;
    state[size_t(v)] = 2;
    return false;
  };
  for (int v = 0; v < vertices; ++v)
    if (state[size_t(v)] == 0 && dfs(dfs, v)) return cycle;
  return {};
}

}  // namespace

Quiver make_quiver(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 1) throw ring_error(errc::bad_presentation, "quiver needs at least one vertex");
  for (const auto& [s, t] : edges)
    if (s < 0 || s >= vertices || t < 0 || t >= vertices)
      throw ring_error(errc::bad_presentation, "edge endpoint out of range");
  auto cycle = find_cycle(vertices, edges);
  if (!cycle.empty()) {
    std::string msg = "quiver has a cycle: ";
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i) msg += " -> ";
      msg += std::to_string(cycle[i]);
    }
    throw ring_error(errc::cyclic_quiver, msg);
  }
  return Quiver{vertices, std::move(edges)};
}

Quiver parse_quiver(const std::string& text) {
  size_t pos = 0;
  auto line_of = [&](size_t at) {
    return 1 + std::count(text.begin(), text.begin() + long(at), '\n');
  };
  auto fail = [&](size_t at, const std::string& msg) {
    throw parse_error(errc::syntax, at,
                      "line " + std::to_string(line_of(at)) + ": " + msg);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&]() -> int {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail(pos, "expected an integer");
    return std::stoi(text.substr(start, pos - start));
  };

  int vertices = integer();
  skip_ws();
  if (pos >= text.size() || text[pos] != ';') fail(pos, "expected ';' after the vertex count");
  ++pos;
  std::vector<std::pair<int, int>> edges;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int src = integer();
    if (pos + 1 >= text.size() || text[pos] != '-' || text[pos + 1] != '>')
      fail(pos, "expected '->' in an edge");
    pos += 2;
    int tgt = integer();
    edges.emplace_back(src, tgt);
  }
  return make_quiver(vertices, std::move(edges));
}

bool has_length2_path(const Quiver& q) {
  for (const auto& [s1, t1] : q.edges)
    for (const auto& [s2, t2] : q.edges)
      if (t1 == s2) return true;
  return false;
}

// ---------------------------------------------------------------------------
// PathAlgebra

PathAlgebra::PathAlgebra(Quiver q, PresPtr field)
    : quiver_(std::move(q)), field_(std::move(field)) {
  // the coefficient presentation must be a field
  uint64_t fs = field_->size_checked(1 << 12);
  for (uint64_t i = 1; i < fs; ++i)
    if (!field_->is_unit(field_->element_at(i)))
      throw ring_error(errc::bad_presentation,
                       "coefficient ring " + field_->describe() + " is not a field");
  fsize_ = fs;
  fdim_ = field_->coeff_len();

  for (int v = 0; v < quiver_.vertices; ++v) paths_.push_back({v, v, {}});
  std::map<std::pair<int, std::vector<int>>, size_t> index;
  for (size_t i = 0; i < paths_.size(); ++i) index[{paths_[i].src, paths_[i].edges}] = i;
  size_t level_begin = 0;
  while (level_begin < paths_.size()) {
    size_t level_end = paths_.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (size_t e = 0; e < quiver_.edges.size(); ++e) {
        if (quiver_.edges[e].first != paths_[i].dst) continue;
        Path ext{paths_[i].src, quiver_.edges[e].second, paths_[i].edges};
        ext.edges.push_back(int(e));
        index[{ext.src, ext.edges}] = paths_.size();
        paths_.push_back(std::move(ext));
      }
    level_begin = level_end;
  }

  concat_.assign(paths_.size(), std::vector<int>(paths_.size(), -1));
  for (size_t i = 0; i < paths_.size(); ++i)
    for (size_t j = 0; j < paths_.size(); ++j) {
      if (paths_[i].src != paths_[j].dst) continue;
      std::vector<int> walk = paths_[j].edges;
      walk.insert(walk.end(), paths_[i].edges.begin(), paths_[i].edges.end());
      auto it = index.find({paths_[j].src, walk});
      if (it == index.end()) throw ring_error(errc::internal, "composable walk is not a path");
      concat_[i][j] = int(it->second);
    }
}

PaPtr make_path_algebra(Quiver q, PresPtr field) {
  return std::make_shared<const PathAlgebra>(std::move(q), std::move(field));
}

std::string PathAlgebra::path_name(size_t i) const {
  const Path& p = paths_[i];
  if (p.edges.empty()) return "e" + std::to_string(p.src);
  std::string s;
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += "a" + std::to_string(*it);
  }
  return s;
}

unsigned __int128 PathAlgebra::size128() const {
  unsigned __int128 s = 1;
  for (size_t i = 0; i < paths_.size(); ++i) s *= fsize_;
  return s;
}

void PathAlgebra::check(const PathElement& a) const {
  if (a.algebra.get() != this)
    throw ring_error(errc::dimension_mismatch, "element from another algebra");
  if (a.c.size() != paths_.size() * fdim_)
    throw ring_error(errc::dimension_mismatch, "coefficient length mismatch");
}

PathElement PathAlgebra::zero() const {
  return PathElement{shared_from_this(), std::vector<int64_t>(paths_.size() * fdim_, 0)};
}

PathElement PathAlgebra::one() const {
  auto e = zero();
  auto one_f = field_->one_vec();
  for (size_t v = 0; v < trivial_count(); ++v)
    std::copy(one_f.begin(), one_f.end(), e.c.begin() + long(v * fdim_));
  return e;
}

PathElement PathAlgebra::path_unit(size_t path_index) const {
  auto e = zero();
  auto one_f = field_->one_vec();
  std::copy(one_f.begin(), one_f.end(), e.c.begin() + long(path_index * fdim_));
  return e;
}

PathElement PathAlgebra::element_at(uint64_t index) const {
  auto e = zero();
  uint64_t rest = index;
  for (size_t i = 0; i < paths_.size(); ++i) {
    auto f = field_->element_at(rest % fsize_);
    rest /= fsize_;
    std::copy(f.c.begin(), f.c.end(), e.c.begin() + long(i * fdim_));
  }
  if (rest != 0) throw ring_error(errc::internal, "element index out of range");
  return e;
}

uint64_t PathAlgebra::index_of(const PathElement& a) const {
  check(a);
  uint64_t idx = 0, stride = 1;
  for (size_t i = 0; i < paths_.size(); ++i) {
    std::vector<int64_t> slice(a.c.begin() + long(i * fdim_), a.c.begin() + long((i + 1) * fdim_));
    idx += stride * field_->index_of(RingElement{field_, std::move(slice)});
    stride *= fsize_;
  }
  return idx;
}

PathElement PathAlgebra::add(const PathElement& a, const PathElement& b) const {
  check(a);
  check(b);
  auto out = zero();
  for (size_t i = 0; i < paths_.size(); ++i) {
    std::vector<int64_t> x(a.c.begin() + long(i * fdim_), a.c.begin() + long((i + 1) * fdim_));
    std::vector<int64_t> y(b.c.begin() + long(i * fdim_), b.c.begin() + long((i + 1) * fdim_));
    std::vector<int64_t> s(fdim_);
    field_->add_vec(s, x, y);
    std::copy(s.begin(), s.end(), out.c.begin() + long(i * fdim_));
  }
  return out;
}

PathElement PathAlgebra::neg(const PathElement& a) const {
  check(a);
  auto out = zero();
  for (size_t i = 0; i < paths_.size(); ++i) {
    std::vector<int64_t> x(a.c.begin() + long(i * fdim_), a.c.begin() + long((i + 1) * fdim_));
    std::vector<int64_t> s(fdim_);
    field_->neg_vec(s, x);
    std::copy(s.begin(), s.end(), out.c.begin() + long(i * fdim_));
  }
  return out;
}

PathElement PathAlgebra::mul(const PathElement& a, const PathElement& b) const {
  check(a);
  check(b);
  auto out = zero();
  std::vector<int64_t> xa(fdim_), xb(fdim_), prod(fdim_), acc(fdim_);
  for (size_t i = 0; i < paths_.size(); ++i) {
    std::copy(a.c.begin() + long(i * fdim_), a.c.begin() + long((i + 1) * fdim_), xa.begin());
    if (std::all_of(xa.begin(), xa.end(), [](int64_t v) { return v == 0; })) continue;
    for (size_t j = 0; j < paths_.size(); ++j) {
      int k = concat_[i][j];
      if (k < 0) continue;
      std::copy(b.c.begin() + long(j * fdim_), b.c.begin() + long((j + 1) * fdim_), xb.begin());
      if (std::all_of(xb.begin(), xb.end(), [](int64_t v) { return v == 0; })) continue;
      field_->mul_vec(prod, xa, xb);
      std::copy(out.c.begin() + long(size_t(k) * fdim_), out.c.begin() + long((size_t(k) + 1) * fdim_),
                acc.begin());
      field_->add_vec(acc, acc, prod);
      std::copy(acc.begin(), acc.end(), out.c.begin() + long(size_t(k) * fdim_));
    }
  }
  return out;
}

PathElement PathAlgebra::pow(const PathElement& a, uint64_t e) const {
  check(a);
  PathElement acc = one();
  PathElement base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool PathAlgebra::is_unit(const PathElement& a) const {
  check(a);
  for (size_t v = 0; v < trivial_count(); ++v) {
    bool nonzero = false;
    for (size_t k = 0; k < fdim_; ++k) nonzero |= a.c[v * fdim_ + k] != 0;
    if (!nonzero) return false;
  }
  return true;
}

std::string PathAlgebra::to_string(const PathElement& a) const {
  check(a);
  std::string s;
  for (size_t i = 0; i < paths_.size(); ++i) {
    std::vector<int64_t> slice(a.c.begin() + long(i * fdim_), a.c.begin() + long((i + 1) * fdim_));
    if (std::all_of(slice.begin(), slice.end(), [](int64_t v) { return v == 0; })) continue;
    if (!s.empty()) s += " + ";
    std::string coeff = field_->vec_to_string(slice);
    if (coeff == "1")
      s += path_name(i);
    else if (coeff.find(' ') != std::string::npos || fdim_ > 1)
      s += "(" + coeff + ")*" + path_name(i);
    else
      s += coeff + "*" + path_name(i);
  }
  return s.empty() ? "0" : s;
}

std::string PathAlgebra::describe() const {
  std::string s = field_->describe() + "Q, Q = " + std::to_string(quiver_.vertices) + ";";
  for (const auto& [a, b] : quiver_.edges) s += " " + std::to_string(a) + "->" + std::to_string(b);
  return s;
}

unsigned __int128 PathAlgebra::unit_candidate_count() const {
  unsigned __int128 n = 1;
  for (size_t v = 0; v < trivial_count(); ++v) n *= fsize_ - 1;
  for (size_t i = trivial_count(); i < paths_.size(); ++i) n *= fsize_;
  return n;
}

PathElement PathAlgebra::unit_candidate_at(uint64_t index) const {
  auto e = zero();
  uint64_t rest = index;
  for (size_t i = 0; i < paths_.size(); ++i) {
    bool trivial = i < trivial_count();
    uint64_t radix = trivial ? fsize_ - 1 : fsize_;
    auto f = field_->element_at(rest % radix + (trivial ? 1 : 0));
    rest /= radix;
    std::copy(f.c.begin(), f.c.end(), e.c.begin() + long(i * fdim_));
  }
  if (rest != 0) throw ring_error(errc::internal, "candidate index out of range");
  return e;
}

PaDeltaResult pa_is_delta_p(const PaPtr& algebra, int64_t p, uint64_t cap) {
  if (!is_prime(p)) throw ring_error(errc::unsupported, std::to_string(p) + " is not prime");
  const auto& field = algebra->field();
  uint64_t q = uint64_t(field->size128());
  bool edgeless = algebra->quiver().edges.empty();
  PaDeltaResult out;
  if (p == 2) {
    out.structural = (q == 3 && edgeless) || (q == 2 && !has_length2_path(algebra->quiver()));
  } else {
    // odd p: trivial quiver and k = F_2 or F_{p+1} with p Mersenne
    bool mersenne_field = q == uint64_t(p) + 1 && (q & (q - 1)) == 0;
    out.structural = edgeless && (q == 2 || mersenne_field);
  }
  if (algebra->unit_candidate_count() <= cap) {
    auto v = is_delta_p(*algebra, p, cap);
    out.brute = v.verdict;
    out.witness = v.witness;
    out.unit_count = v.unit_count;
    if (v.verdict != out.structural)
      throw ring_error(errc::internal,
                       "structural and brute-force verdicts disagree on " + algebra->describe());
  }
  return out;
}

}  // namespace deltaring
