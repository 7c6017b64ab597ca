#include "latcube/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "latcube/errors.hpp"

namespace latcube {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidValue("permutation degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw InvalidValue("images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw InvalidValue("permutation degree must be >= 1");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) throw InvalidValue("permutation degree must be >= 1");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (int pt : cycle) {
      if (pt < 0 || pt >= degree)
        throw InvalidValue("cycle point out of range");
      if (used[pt]) throw InvalidValue("repeated point in cycles");
      used[pt] = true;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw MismatchError("compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) images[i] = q(p(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) images[p(i)] = i;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
  return inverse(q) * p * q;
}

bool operator==(const Cycle& a, const Cycle& b) {
  if (a.points.size() != b.points.size()) return false;
  if (a.points.empty()) return true;
  auto it = std::find(b.points.begin(), b.points.end(), a.points.front());
  if (it == b.points.end()) return false;
  std::size_t offset = it - b.points.begin();
  for (std::size_t j = 0; j < a.points.size(); ++j)
    if (a.points[j] != b.points[(j + offset) % b.points.size()]) return false;
  return true;
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(p.degree(), false);
  // Scanning points in ascending order makes each cycle start at its minimum.
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      c.points.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const Cycle& a, const Cycle& b) {
                     return a.length() > b.length();
                   });
  return cycles;
}

CycleStructure CycleStructure::from_lengths(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  CycleStructure cs;
  for (int len : lengths) {
    if (len < 1) throw InvalidValue("cycle length must be >= 1");
    if (!cs.terms_.empty() && cs.terms_.back().length == len)
      ++cs.terms_.back().multiplicity;
    else
      cs.terms_.push_back({len, 1});
  }
  return cs;
}

CycleStructure CycleStructure::parse(std::string_view text) {
  std::vector<int> lengths;
  auto read_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
      throw ParseError("bad cycle structure term: " + std::string(s));
    return v;
  };
  while (!text.empty()) {
    auto dot = text.find('.');
    std::string_view term = text.substr(0, dot);
    text = dot == std::string_view::npos ? std::string_view{}
                                         : text.substr(dot + 1);
    auto caret = term.find('^');
    int len = read_int(term.substr(0, caret));
    int mult = caret == std::string_view::npos ? 1
                                               : read_int(term.substr(caret + 1));
    lengths.insert(lengths.end(), mult, len);
  }
  if (lengths.empty()) throw ParseError("empty cycle structure");
  return from_lengths(std::move(lengths));
}

int CycleStructure::degree() const {
  int n = 0;
  for (const auto& t : terms_) n += t.length * t.multiplicity;
  return n;
}

std::vector<int> CycleStructure::lengths() const {
  std::vector<int> out;
  for (const auto& t : terms_) out.insert(out.end(), t.multiplicity, t.length);
  return out;
}

std::string CycleStructure::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << '.';
    os << terms_[i].length;
    if (terms_[i].multiplicity != 1) os << '^' << terms_[i].multiplicity;
  }
  return os.str();
}

std::strong_ordering operator<=>(const CycleStructure& a,
                                 const CycleStructure& b) {
  auto la = a.lengths();
  auto lb = b.lengths();
  return std::lexicographical_compare_three_way(la.begin(), la.end(),
                                                lb.begin(), lb.end());
}

CycleStructure cycle_structure(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : cycle_decomposition(p)) lengths.push_back(c.length());
  return CycleStructure::from_lengths(std::move(lengths));
}

Permutation canonical_permutation(const CycleStructure& cs) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int len : cs.lengths()) {
    std::vector<int> c(len);
    std::iota(c.begin(), c.end(), next);
    next += len;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(cs.degree(), cycles);
}

int orbit_length(const Permutation& p, int point) {
  if (point < 0 || point >= p.degree())
    throw InvalidValue("orbit_length: point out of range");
  int len = 1;
  for (int x = p(point); x != point; x = p(x)) ++len;
  return len;
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) == i) out.push_back(i);
  return out;
}

bool are_conjugate(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw MismatchError("are_conjugate: degree mismatch");
  return cycle_structure(p) == cycle_structure(q);
}

std::optional<Permutation> conjugator(const Permutation& p,
                                      const Permutation& q) {
  if (!are_conjugate(p, q)) return std::nullopt;
  // Both decompositions are sorted by length, so equal-length cycles line up
  // index for index.
  auto cp = cycle_decomposition(p);
  auto cq = cycle_decomposition(q);
  std::vector<int> images(p.degree());
  for (std::size_t c = 0; c < cp.size(); ++c)
    for (int j = 0; j < cp[c].length(); ++j)
      images[cp[c].points[j]] = cq[c].points[j];
  return Permutation(std::move(images));
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' at offset " +
                       std::to_string(pos_) + " in \"" + std::string(text_) +
                       "\"");
  }
  bool at_number() {
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }
  int number() {
    skip_space();
    int v = 0;
    auto first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first)
      throw ParseError("expected a symbol in \"" + std::string(text_) + "\"");
    pos_ += ptr - first;
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<int> degree) {
  if (degree && *degree < 1) throw ParseError("degree must be >= 1");
  Lexer lex(text);
  if (lex.accept('[')) {
    std::vector<int> images;
    while (!lex.accept(']')) {
      if (!images.empty()) lex.accept(',');
      images.push_back(lex.number() - 1);
    }
    if (!lex.done()) throw ParseError("trailing text after ']'");
    if (degree && *degree != static_cast<int>(images.size()))
      throw ParseError("one-line notation length differs from degree");
    try {
      return Permutation(std::move(images));
    } catch (const InvalidValue& e) {
      throw ParseError("\"" + std::string(text) + "\": " + e.what());
    }
  }

  std::vector<std::vector<int>> cycles;
  int largest = 0;
  if (lex.done()) throw ParseError("empty permutation text");
  while (!lex.done()) {
    lex.expect('(');
    std::vector<int> cycle;
    while (!lex.accept(')')) {
      if (!cycle.empty()) lex.accept(',');
      int sym = lex.number();
      if (sym < 1) throw ParseError("symbols are 1-based");
      largest = std::max(largest, sym);
      cycle.push_back(sym - 1);
    }
    cycles.push_back(std::move(cycle));
  }
  int n = degree.value_or(largest);
  if (n < 1) throw ParseError("cannot infer degree of \"" + std::string(text) +
                              "\"; give it explicitly");
  if (largest > n)
    throw ParseError("symbol " + std::to_string(largest) +
                     " out of range for degree " + std::to_string(n));
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const InvalidValue& e) {
    throw ParseError("\"" + std::string(text) + "\": " + e.what());
  }
}

std::string format_permutation(const Permutation& p, bool include_fixed) {
  std::ostringstream os;
  for (const auto& c : cycle_decomposition(p)) {
    if (c.length() == 1 && !include_fixed) continue;
    os << '(';
    for (int j = 0; j < c.length(); ++j) {
      if (j) os << ' ';
      os << c.points[j] + 1;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace latcube
