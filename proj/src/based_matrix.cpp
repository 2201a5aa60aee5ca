#include "virtstring/based_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "virtstring/error.hpp"

namespace virtstring {

std::string Label::name() const {
  switch (kind) {
    case Kind::Base:
      return "s";
    case Kind::Arrow:
      return arrow_name(id);
    case Kind::Synthetic:
      return "x" + std::to_string(id);
  }
  return "?";
}

BasedMatrix::BasedMatrix() : size_(1), labels_{Label::base()}, b_{0} {}

BasedMatrix::BasedMatrix(std::vector<Label> labels, std::vector<int> b)
    : size_(static_cast<int>(labels.size())), labels_(std::move(labels)), b_(std::move(b)) {}

BasedMatrix::BasedMatrix(std::vector<Label> labels, const std::vector<std::vector<int>>& rows)
    : size_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  if (size_ < 1 || labels_[0].kind != Label::Kind::Base) throw InvalidArgument("based matrix needs s at index 0");
  if (static_cast<int>(rows.size()) != size_) throw InvalidArgument("based matrix: row count != label count");
  for (int i = 1; i < size_; ++i) {
    if (labels_[static_cast<std::size_t>(i)].kind == Label::Kind::Base)
      throw InvalidArgument("based matrix: s may only appear at index 0");
    for (int j = 1; j < i; ++j)
      if (labels_[static_cast<std::size_t>(i)] == labels_[static_cast<std::size_t>(j)])
        throw InvalidArgument("based matrix: duplicate label " + labels_[static_cast<std::size_t>(i)].name());
  }
  b_.assign(static_cast<std::size_t>(size_ * size_), 0);
  for (int i = 0; i < size_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != size_)
      throw InvalidArgument("based matrix: row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < size_; ++j)
      b_[static_cast<std::size_t>(i * size_ + j)] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) throw InvalidArgument("based matrix is not skew-symmetric");
}

std::vector<std::vector<int>> BasedMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(size_), std::vector<int>(static_cast<std::size_t>(size_)));
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
  return out;
}

int BasedMatrix::find(const Label& l) const {
  for (int i = 0; i < size_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == l) return i;
  return -1;
}

BasedMatrix BasedMatrix::without(std::span<const int> indices) const {
  std::vector<bool> drop(static_cast<std::size_t>(size_), false);
  for (int i : indices) {
    if (i <= 0 || i >= size_) throw InvalidArgument("cannot delete index " + std::to_string(i));
    drop[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> keep;
  for (int i = 0; i < size_; ++i)
    if (!drop[static_cast<std::size_t>(i)]) keep.push_back(i);
  return permuted(keep);
}

BasedMatrix BasedMatrix::permuted(std::span<const int> order) const {
  if (order.empty() || order[0] != 0) throw InvalidArgument("permutation must keep s at index 0");
  const int n = static_cast<int>(order.size());
  std::vector<Label> labels;
  std::vector<int> b(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(label(order[static_cast<std::size_t>(i)]));
    for (int j = 0; j < n; ++j)
      b[static_cast<std::size_t>(i * n + j)] = (*this)(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return BasedMatrix(std::move(labels), std::move(b));
}

BasedMatrix BasedMatrix::with_row(int i, std::span<const int> row) const {
  if (static_cast<int>(row.size()) != size_ || row[static_cast<std::size_t>(i)] != 0)
    throw InvalidArgument("with_row: bad row");
  BasedMatrix out = *this;
  for (int j = 0; j < size_; ++j) {
    out.b_[static_cast<std::size_t>(i * size_ + j)] = row[static_cast<std::size_t>(j)];
    out.b_[static_cast<std::size_t>(j * size_ + i)] = -row[static_cast<std::size_t>(j)];
  }
  return out;
}

bool is_annihilating(const BasedMatrix& m, int g) {
  if (g <= 0) return false;
  for (int h = 0; h < m.size(); ++h)
    if (m(g, h) != 0) return false;
  return true;
}

bool is_core(const BasedMatrix& m, int g) {
  if (g <= 0) return false;
  for (int h = 0; h < m.size(); ++h)
    if (m(g, h) != m(0, h)) return false;
  return true;
}

bool are_complementary(const BasedMatrix& m, int g1, int g2) {
  if (g1 <= 0 || g2 <= 0 || g1 == g2) return false;
  for (int h = 0; h < m.size(); ++h)
    if (m(g1, h) + m(g2, h) != m(0, h)) return false;
  return true;
}

bool is_self_complementary(const BasedMatrix& m, int g) {
  for (int h = 0; h < m.size(); ++h)
    if (2 * m(g, h) != m(0, h)) return false;
  return true;
}

bool is_s_annihilating_like(const BasedMatrix& m) {
  for (int h = 0; h < m.size(); ++h)
    if (m(0, h) != 0) return false;
  return true;
}

bool ElementClass::has_self_complementary() const {
  return std::find(self_complementary.begin() + 1, self_complementary.end(), true) != self_complementary.end();
}

ElementClass classify(const BasedMatrix& m) {
  const int n = m.size();
  ElementClass c;
  c.annihilating.assign(static_cast<std::size_t>(n), false);
  c.core.assign(static_cast<std::size_t>(n), false);
  c.self_complementary.assign(static_cast<std::size_t>(n), false);
  c.s_annihilating_like = is_s_annihilating_like(m);
  for (int g = 1; g < n; ++g) {
    c.annihilating[static_cast<std::size_t>(g)] = is_annihilating(m, g);
    c.core[static_cast<std::size_t>(g)] = is_core(m, g);
    c.self_complementary[static_cast<std::size_t>(g)] = is_self_complementary(m, g);
    for (int h = g + 1; h < n; ++h)
      if (are_complementary(m, g, h)) c.complementary_pairs.emplace_back(g, h);
  }
  return c;
}

BasedMatrix based_matrix(const GaussDiagram& g) {
  const int n = g.arrow_count();
  // link[e][f]: +1 if f links e positively, -1 if negatively.
  std::vector<std::vector<int>> link(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int e = 0; e < n; ++e) {
    const int a = g.tail_slot(e), b = g.head_slot(e);
    for (int f = 0; f < n; ++f) {
      if (f == e) continue;
      const int c = g.tail_slot(f), d = g.head_slot(f);
      if (g.inside_arc(a, b, c) && g.inside_arc(b, a, d))
        link[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] = 1;
      else if (g.inside_arc(b, a, c) && g.inside_arc(a, b, d))
        link[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] = -1;
    }
  }
  // Intersection count ab.cd of the arcs tail->head of e and of f.
  auto arc_dot = [&](int e, int f) {
    const int a = g.tail_slot(e), b = g.head_slot(e);
    const int c = g.tail_slot(f), d = g.head_slot(f);
    int count = 0;
    for (int x = 0; x < n; ++x) {
      const int t = g.tail_slot(x), h = g.head_slot(x);
      if (g.inside_arc(a, b, t) && g.inside_arc(c, d, h)) ++count;
      if (g.inside_arc(c, d, t) && g.inside_arc(a, b, h)) --count;
    }
    return count;
  };

  std::vector<Label> labels{Label::base()};
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (int e = 0; e < n; ++e) {
    labels.push_back(Label::arrow(e));
    int ne = 0;
    for (int f = 0; f < n; ++f) ne += link[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
    rows[static_cast<std::size_t>(e + 1)][0] = ne;
    rows[0][static_cast<std::size_t>(e + 1)] = -ne;
    for (int f = 0; f < n; ++f)
      if (f != e)
        rows[static_cast<std::size_t>(e + 1)][static_cast<std::size_t>(f + 1)] =
            arc_dot(e, f) + link[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
  }
  return BasedMatrix(std::move(labels), rows);
}

std::vector<Deletion> available_deletions(const BasedMatrix& m) {
  std::vector<Deletion> out;
  for (int g = 1; g < m.size(); ++g)
    if (is_annihilating(m, g)) out.push_back({Deletion::Kind::Annihilating, {m.label(g)}});
  for (int g = 1; g < m.size(); ++g)
    if (is_core(m, g)) out.push_back({Deletion::Kind::Core, {m.label(g)}});
  for (int g = 1; g < m.size(); ++g)
    for (int h = g + 1; h < m.size(); ++h)
      if (are_complementary(m, g, h)) out.push_back({Deletion::Kind::ComplementaryPair, {m.label(g), m.label(h)}});
  return out;
}

BasedMatrix apply_deletion(const BasedMatrix& m, const Deletion& del) {
  std::vector<int> idx;
  for (const Label& l : del.removed) {
    const int i = m.find(l);
    if (i <= 0) throw InvalidArgument("deletion names an element not in the matrix: " + l.name());
    idx.push_back(i);
  }
  return m.without(idx);
}

namespace {

template <class Pick>
Reduction reduce_with(const BasedMatrix& m, Pick pick) {
  Reduction r{m, {}};
  while (true) {
    std::vector<Deletion> dels = available_deletions(r.primitive);
    if (dels.empty()) break;
    Deletion chosen = std::move(dels[pick(dels.size())]);
    r.primitive = apply_deletion(r.primitive, chosen);
    r.steps.push_back(std::move(chosen));
  }
  return r;
}

}  // namespace

Reduction reduce_to_primitive(const BasedMatrix& m) {
  return reduce_with(m, [](std::size_t) { return std::size_t{0}; });
}

Reduction reduce_to_primitive(const BasedMatrix& m, std::mt19937_64& rng) {
  return reduce_with(m, [&rng](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  });
}

bool is_primitive(const BasedMatrix& m) { return available_deletions(m).empty(); }

namespace {

BasedMatrix append_rows(const BasedMatrix& m, const std::vector<std::vector<int>>& new_rows, std::vector<Label> new_labels) {
  // new_rows[k] has entries for every old index followed by every new index.
  const int n = m.size();
  const int k = static_cast<int>(new_rows.size());
  std::vector<Label> labels(m.labels().begin(), m.labels().end());
  labels.insert(labels.end(), new_labels.begin(), new_labels.end());
  std::vector<std::vector<int>> rows = m.rows();
  for (auto& r : rows) r.resize(static_cast<std::size_t>(n + k), 0);
  for (int a = 0; a < k; ++a) rows.push_back(new_rows[static_cast<std::size_t>(a)]);
  for (int a = 0; a < k; ++a)
    for (int h = 0; h < n; ++h)
      rows[static_cast<std::size_t>(h)][static_cast<std::size_t>(n + a)] = -new_rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(h)];
  return BasedMatrix(std::move(labels), rows);
}

}  // namespace

BasedMatrix extend_annihilating(const BasedMatrix& m, int tag) {
  return append_rows(m, {std::vector<int>(static_cast<std::size_t>(m.size() + 1), 0)}, {Label::synthetic(tag)});
}

BasedMatrix extend_core(const BasedMatrix& m, int tag) {
  std::vector<int> row(static_cast<std::size_t>(m.size() + 1), 0);
  for (int h = 0; h < m.size(); ++h) row[static_cast<std::size_t>(h)] = m(0, h);
  return append_rows(m, {row}, {Label::synthetic(tag)});
}

BasedMatrix extend_complementary(const BasedMatrix& m, std::span<const int> row_g1, int tag) {
  const int n = m.size();
  if (static_cast<int>(row_g1.size()) != n) throw InvalidArgument("extend_complementary: row length must equal size");
  std::vector<int> r1(static_cast<std::size_t>(n + 2), 0), r2(static_cast<std::size_t>(n + 2), 0);
  for (int h = 0; h < n; ++h) {
    r1[static_cast<std::size_t>(h)] = row_g1[static_cast<std::size_t>(h)];
    r2[static_cast<std::size_t>(h)] = m(0, h) - row_g1[static_cast<std::size_t>(h)];
  }
  r1[static_cast<std::size_t>(n + 1)] = row_g1[0];
  r2[static_cast<std::size_t>(n)] = -row_g1[0];
  return append_rows(m, {r1, r2}, {Label::synthetic(tag), Label::synthetic(tag + 1)});
}

namespace detail {

void append_int(std::string& out, int v) {
  // Biased big-endian so that byte order agrees with integer order.
  const auto u = static_cast<std::uint32_t>(v) ^ 0x80000000u;
  out.push_back(static_cast<char>(u >> 24));
  out.push_back(static_cast<char>((u >> 16) & 0xFF));
  out.push_back(static_cast<char>((u >> 8) & 0xFF));
  out.push_back(static_cast<char>(u & 0xFF));
}

namespace {

class Canonicalizer {
 public:
  Canonicalizer(const BasedMatrix& m, int fixed) : m_(m), n_(m.size()), fixed_(fixed) {
    std::vector<int> free;
    for (int g = fixed_; g < n_; ++g) free.push_back(g);
    for (int g = 0; g < n_; ++g) signature_.push_back(signature(g));
    std::stable_sort(free.begin(), free.end(), [&](int a, int b) { return signature_[static_cast<std::size_t>(a)] < signature_[static_cast<std::size_t>(b)]; });
    sorted_free_ = free;
    // Elements at positions sharing a signature may be permuted among themselves.
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (i == 0 || signature_[static_cast<std::size_t>(free[i])] != signature_[static_cast<std::size_t>(free[i - 1])])
        cells_.emplace_back();
      cells_.back().push_back(free[i]);
      cell_of_position_.push_back(static_cast<int>(cells_.size()) - 1);
    }
    used_.assign(static_cast<std::size_t>(n_), false);
    for (int g = 0; g < fixed_; ++g) order_.push_back(g);
    for (int i = 1; i < fixed_; ++i) append_block(cur_, i, order_);
  }

  std::pair<std::vector<int>, std::string> run() {
    search(fixed_);
    std::string key;
    append_int(key, n_);
    for (int g : best_order_) {
      if (g < fixed_) continue;
      for (int v : signature_[static_cast<std::size_t>(g)]) append_int(key, v);
    }
    for (int v : best_) append_int(key, v);
    return {best_order_, key};
  }

 private:
  std::vector<int> signature(int g) const {
    std::vector<int> sig;
    for (int f = 0; f < fixed_; ++f) sig.push_back(m_(g, f));
    std::vector<int> row;
    for (int h = 0; h < n_; ++h) row.push_back(m_(g, h));
    std::sort(row.begin(), row.end());
    sig.insert(sig.end(), row.begin(), row.end());
    return sig;
  }

  void append_block(std::vector<int>& seq, int pos, const std::vector<int>& order) const {
    const int g = order[static_cast<std::size_t>(pos)];
    for (int j = 0; j < pos; ++j) seq.push_back(m_(g, order[static_cast<std::size_t>(j)]));
  }

  bool twins(int x, int y) const {
    if (m_(x, y) != 0) return false;
    for (int h = 0; h < n_; ++h)
      if (h != x && h != y && m_(x, h) != m_(y, h)) return false;
    return true;
  }

  // Negative if cur_ is a strict prefix-wise improvement, positive if worse.
  int compare_prefix() const {
    if (!have_best_) return -1;
    const std::size_t len = cur_.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (cur_[i] < best_[i]) return -1;
      if (cur_[i] > best_[i]) return 1;
    }
    return 0;
  }

  void search(int pos) {
    if (pos == n_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const auto& cell = cells_[static_cast<std::size_t>(cell_of_position_[static_cast<std::size_t>(pos - fixed_)])];
    std::vector<std::pair<std::vector<int>, int>> options;
    for (int c : cell) {
      if (used_[static_cast<std::size_t>(c)]) continue;
      order_.push_back(c);
      std::vector<int> block;
      append_block(block, pos, order_);
      order_.pop_back();
      options.emplace_back(std::move(block), c);
    }
    std::sort(options.begin(), options.end());
    std::vector<int> tried;
    for (const auto& [block, c] : options) {
      if (block != options.front().first) break;
      bool redundant = false;
      for (int t : tried)
        if (twins(t, c)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(c);

      const std::size_t mark = cur_.size();
      cur_.insert(cur_.end(), block.begin(), block.end());
      if (compare_prefix() <= 0) {
        order_.push_back(c);
        used_[static_cast<std::size_t>(c)] = true;
        search(pos + 1);
        used_[static_cast<std::size_t>(c)] = false;
        order_.pop_back();
      }
      cur_.resize(mark);
    }
  }

  const BasedMatrix& m_;
  int n_;
  int fixed_;
  std::vector<std::vector<int>> signature_;
  std::vector<int> sorted_free_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_position_;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<int> cur_;
  std::vector<int> best_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

}  // namespace

std::pair<std::vector<int>, std::string> canonicalize(const BasedMatrix& m, int fixed, int cap) {
  if (m.size() - 1 > cap)
    throw TooLarge("matrix has " + std::to_string(m.size() - 1) + " non-basepoint elements; canonicalization cap is " +
                   std::to_string(cap));
  return Canonicalizer(m, fixed).run();
}

}  // namespace detail

CanonicalKey canonical_form(const BasedMatrix& m, int cap) { return {detail::canonicalize(m, 1, cap).second}; }

std::vector<int> canonical_order(const BasedMatrix& m, int cap) { return detail::canonicalize(m, 1, cap).first; }

int rho(const GaussDiagram& g) { return reduce_to_primitive(based_matrix(g)).primitive.size() - 1; }

bool homologous(const BasedMatrix& m1, const BasedMatrix& m2, int cap) {
  return canonical_form(reduce_to_primitive(m1).primitive, cap) == canonical_form(reduce_to_primitive(m2).primitive, cap);
}

}  // namespace virtstring
