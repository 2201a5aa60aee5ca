#include "virtstring/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "virtstring/based_matrix.hpp"
#include "virtstring/error.hpp"

namespace virtstring {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

char endpoint_byte(int label, Role role) {
  return static_cast<char>((label << 1) | static_cast<int>(role));
}

// Serialization of g read from slot `start`, arrows renamed by first
// appearance. `fixed` (if >= 0) is pinned to label 0 and the others start at 1.
std::string rotation_bytes(const GaussDiagram& g, int start, int fixed, std::vector<int>& label) {
  const int n = g.arrow_count();
  const int size = g.slot_count();
  label.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  if (fixed >= 0) {
    label[static_cast<std::size_t>(fixed)] = 0;
    next = 1;
  }
  std::string out;
  out.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    const Endpoint& e = g.at((start + i) % size);
    int& l = label[static_cast<std::size_t>(e.arrow)];
    if (l < 0) l = next++;
    out.push_back(endpoint_byte(l, e.role));
  }
  return out;
}

struct BestRotation {
  int start = 0;
  std::string bytes;
  std::vector<int> label;
};

BestRotation best_rotation(const GaussDiagram& g, int fixed) {
  BestRotation best;
  std::vector<int> label;
  const int size = g.slot_count();
  for (int start = 0; start < std::max(size, 1); ++start) {
    std::string bytes = rotation_bytes(g, start, fixed, label);
    if (start == 0 || bytes < best.bytes) {
      best.start = start;
      best.bytes = std::move(bytes);
      best.label = label;
    }
  }
  return best;
}

}  // namespace

std::string CanonicalKey::hex() const {
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kHexDigits[c >> 4]);
    out.push_back(kHexDigits[c & 0xF]);
  }
  return out;
}

GaussDiagram::GaussDiagram(std::vector<Endpoint> slots) : slots_(std::move(slots)) {
  if (slots_.size() % 2 != 0) throw InvalidArgument("odd slot count " + std::to_string(slots_.size()));
  const int n = static_cast<int>(slots_.size() / 2);
  ends_.assign(static_cast<std::size_t>(n), {-1, -1});
  for (int i = 0; i < static_cast<int>(slots_.size()); ++i) {
    const Endpoint& e = slots_[static_cast<std::size_t>(i)];
    if (e.arrow < 0 || e.arrow >= n)
      throw InvalidArgument("arrow id " + std::to_string(e.arrow) + " outside 0.." + std::to_string(n - 1));
    int& pos = ends_[static_cast<std::size_t>(e.arrow)][static_cast<std::size_t>(e.role)];
    if (pos >= 0) throw InvalidArgument("endpoint of arrow " + std::to_string(e.arrow) + " repeated");
    pos = i;
  }
}

int GaussDiagram::wrap(int slot) const {
  const int size = slot_count();
  return ((slot % size) + size) % size;
}

bool GaussDiagram::inside_arc(int from, int to, int slot) const {
  const int size = slot_count();
  const int off = ((slot - from) % size + size) % size;
  const int len = ((to - from) % size + size) % size;
  return off > 0 && off < len;
}

bool GaussDiagram::adjacent(int a, int b) const {
  const int size = slot_count();
  if (size < 2 || a == b) return false;
  const int diff = ((a - b) % size + size) % size;
  return diff == 1 || diff == size - 1;
}

SignedDiagram::SignedDiagram(GaussDiagram g, int distinguished, Sign s)
    : base(std::move(g)), d(distinguished), sign(s) {
  if (d < 0 || d >= base.arrow_count())
    throw InvalidArgument("distinguished arrow " + std::to_string(d) + " is not an arrow of the diagram");
}

GaussDiagram parse_diagram(std::string_view text) {
  std::vector<Endpoint> slots;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'T' && token[0] != 'H'))
      throw ParseError("malformed token '" + token + "'");
    int id = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, id);
    if (ec != std::errc{} || ptr != last || id < 0) throw ParseError("malformed token '" + token + "'");
    slots.push_back({id, token[0] == 'T' ? Role::Tail : Role::Head});
  }
  if (slots.size() % 2 != 0) throw ParseError("odd slot count " + std::to_string(slots.size()));
  const int n = static_cast<int>(slots.size() / 2);
  std::vector<std::array<bool, 2>> seen(static_cast<std::size_t>(n), {false, false});
  for (const Endpoint& e : slots) {
    if (e.arrow >= n)
      throw ParseError("arrow id " + std::to_string(e.arrow) + " out of range for " + std::to_string(n) +
                       " arrows (ids must be 0..n-1)");
    bool& s = seen[static_cast<std::size_t>(e.arrow)][static_cast<std::size_t>(e.role)];
    if (s)
      throw ParseError(std::string("endpoint ") + (e.role == Role::Tail ? "T" : "H") + std::to_string(e.arrow) +
                       " repeated");
    s = true;
  }
  for (int a = 0; a < n; ++a) {
    const auto& s = seen[static_cast<std::size_t>(a)];
    if (!s[0]) throw ParseError("arrow " + std::to_string(a) + " has no Tail");
    if (!s[1]) throw ParseError("arrow " + std::to_string(a) + " has no Head");
  }
  return GaussDiagram(std::move(slots));
}

std::string serialize_diagram(const GaussDiagram& g) {
  std::string out;
  for (const Endpoint& e : g.slots()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(e.role == Role::Tail ? 'T' : 'H');
    out += std::to_string(e.arrow);
  }
  return out;
}

GaussDiagram rotate(const GaussDiagram& g, int k) {
  if (g.empty()) return g;
  std::vector<Endpoint> slots;
  slots.reserve(static_cast<std::size_t>(g.slot_count()));
  for (int i = 0; i < g.slot_count(); ++i) slots.push_back(g.at(g.wrap(k + i)));
  return GaussDiagram(std::move(slots));
}

GaussDiagram relabel(const GaussDiagram& g, std::span<const int> new_id) {
  if (static_cast<int>(new_id.size()) != g.arrow_count()) throw InvalidArgument("relabel: size mismatch");
  std::vector<Endpoint> slots(g.slots().begin(), g.slots().end());
  for (Endpoint& e : slots) e.arrow = new_id[static_cast<std::size_t>(e.arrow)];
  return GaussDiagram(std::move(slots));
}

GaussDiagram reverse_slots(const GaussDiagram& g) {
  std::vector<Endpoint> slots(g.slots().rbegin(), g.slots().rend());
  return GaussDiagram(std::move(slots));
}

GaussDiagram restrict_to(const GaussDiagram& g, std::span<const int> keep) {
  std::vector<int> new_id(static_cast<std::size_t>(g.arrow_count()), -1);
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) new_id[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  std::vector<Endpoint> slots;
  for (const Endpoint& e : g.slots()) {
    const int id = new_id[static_cast<std::size_t>(e.arrow)];
    if (id >= 0) slots.push_back({id, e.role});
  }
  return GaussDiagram(std::move(slots));
}

GaussDiagram sub_diagram_in_arc(const GaussDiagram& g, int from, int to) {
  std::vector<int> keep;
  for (int a = 0; a < g.arrow_count(); ++a)
    if (g.inside_arc(from, to, g.tail_slot(a)) && g.inside_arc(from, to, g.head_slot(a))) keep.push_back(a);
  return restrict_to(g, keep);
}

GaussDiagram canonical_diagram(const GaussDiagram& g) {
  if (g.empty()) return g;
  const BestRotation best = best_rotation(g, -1);
  return relabel(rotate(g, best.start), best.label);
}

CanonicalKey canonical_key(const GaussDiagram& g) { return {best_rotation(g, -1).bytes}; }

SignedDiagram canonical_signed_diagram(const SignedDiagram& g) {
  const BestRotation best = best_rotation(g.base, g.d);
  return SignedDiagram(relabel(rotate(g.base, best.start), best.label), 0, g.sign);
}

CanonicalKey canonical_key_signed(const SignedDiagram& g) {
  return {std::string(1, sign_char(g.sign)) + best_rotation(g.base, g.d).bytes};
}

bool is_semi_trivial(const SignedDiagram& g) {
  return g.base.adjacent(g.base.tail_slot(g.d), g.base.head_slot(g.d));
}

GaussDiagram make_example_M() {
  // Gauss word ABCADBECDE; the first occurrence of each letter is the head.
  return parse_diagram("H0 H1 H2 T0 H3 T1 H4 T2 T3 T4");
}

GaussDiagram make_alpha_pq(int p, int q) {
  if (p < 1 || q < 1) throw InvalidArgument("alpha_{p,q} needs p >= 1 and q >= 1");
  // Counterclockwise: vertical heads right to left, horizontal heads top to
  // bottom, vertical tails left to right, horizontal tails bottom to top.
  std::vector<Endpoint> slots;
  for (int i = p - 1; i >= 0; --i) slots.push_back({i, Role::Head});
  for (int j = q - 1; j >= 0; --j) slots.push_back({p + j, Role::Head});
  for (int i = 0; i < p; ++i) slots.push_back({i, Role::Tail});
  for (int j = 0; j < q; ++j) slots.push_back({p + j, Role::Tail});
  GaussDiagram g(std::move(slots));

  const BasedMatrix m = based_matrix(g);
  for (int i = 1; i <= p + q; ++i) {
    const bool vertical = i <= p;
    if (m(i, 0) != (vertical ? q : -p)) throw Error("alpha_{p,q}: b(e,s) identity failed");
    for (int j = 1; j <= p + q; ++j)
      if (vertical == (j <= p) && m(i, j) != 0) throw Error("alpha_{p,q}: b does not vanish within a family");
  }
  return g;
}

GaussDiagram random_diagram(int n, std::mt19937_64& rng) {
  std::vector<Endpoint> slots;
  for (int a = 0; a < n; ++a) {
    slots.push_back({a, Role::Tail});
    slots.push_back({a, Role::Head});
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  return GaussDiagram(std::move(slots));
}

std::string arrow_name(int arrow) {
  if (arrow >= 0 && arrow < 26) return std::string(1, static_cast<char>('A' + arrow));
  return "e" + std::to_string(arrow);
}

}  // namespace virtstring
