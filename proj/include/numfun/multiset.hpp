#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace numfun {

struct MultisetEntry {
  std::size_t index = 0;
  std::size_t multiplicity = 0;

  friend auto operator<=>(MultisetEntry const&, MultisetEntry const&) = default;
};

/// A finite multiset of indices, kept sorted by index with positive
/// multiplicities. The sorted entry list is the equality key.
class Multiset {
 public:
  Multiset() = default;

  explicit Multiset(std::vector<MultisetEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](auto const& a, auto const& b) { return a.index < b.index; });
    for (auto const& e : entries) {
      if (e.multiplicity == 0) continue;
      if (!entries_.empty() && entries_.back().index == e.index)
        entries_.back().multiplicity += e.multiplicity;
      else
        entries_.push_back(e);
    }
  }

  static Multiset from_word(std::span<std::size_t const> word) {
    std::vector<MultisetEntry> entries;
    entries.reserve(word.size());
    for (auto i : word) entries.push_back({i, 1});
    return Multiset(std::move(entries));
  }

  static Multiset from_word(std::initializer_list<std::size_t> word) {
    std::vector<std::size_t> w(word);
    return from_word(std::span<std::size_t const>(w));
  }

  std::vector<MultisetEntry> const& entries() const { return entries_; }

  /// |X|: element count with multiplicity.
  std::size_t cardinality() const {
    std::size_t c = 0;
    for (auto const& e : entries_) c += e.multiplicity;
    return c;
  }

  /// #X as a count of distinct indices.
  std::size_t support_size() const { return entries_.size(); }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    s.reserve(entries_.size());
    for (auto const& e : entries_) s.push_back(e.index);
    return s;
  }

  std::size_t multiplicity(std::size_t index) const {
    for (auto const& e : entries_)
      if (e.index == index) return e.multiplicity;
    return 0;
  }

  bool empty() const { return entries_.empty(); }

  /// Largest index present plus one (0 for the empty multiset).
  std::size_t index_bound() const {
    return entries_.empty() ? 0 : entries_.back().index + 1;
  }

  /// Sorted word listing each index `multiplicity` times.
  std::vector<std::size_t> word() const {
    std::vector<std::size_t> w;
    w.reserve(cardinality());
    for (auto const& e : entries_)
      w.insert(w.end(), e.multiplicity, e.index);
    return w;
  }

  /// Text key with 1-based indices, e.g. "1^2,3"; the empty multiset is "".
  std::string key() const {
    std::string s;
    for (auto const& e : entries_) {
      if (!s.empty()) s += ',';
      s += std::to_string(e.index + 1);
      if (e.multiplicity != 1) {
        s += '^';
        s += std::to_string(e.multiplicity);
      }
    }
    return s;
  }

  static Multiset parse_key(std::string_view key) {
    std::vector<MultisetEntry> entries;
    while (!key.empty()) {
      auto comma = key.find(',');
      auto item = key.substr(0, comma);
      key = comma == std::string_view::npos ? std::string_view{}
                                            : key.substr(comma + 1);
      if (comma != std::string_view::npos && key.empty())
        throw std::invalid_argument("multiset key: trailing comma");
      auto caret = item.find('^');
      auto idx = parse_positive(item.substr(0, caret));
      std::size_t mult = 1;
      if (caret != std::string_view::npos)
        mult = parse_positive(item.substr(caret + 1));
      entries.push_back({idx - 1, mult});
    }
    return Multiset(std::move(entries));
  }

  friend auto operator<=>(Multiset const&, Multiset const&) = default;

 private:
  static std::size_t parse_positive(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("multiset key: empty field");
    std::size_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("multiset key: bad character");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    if (v == 0) throw std::invalid_argument("multiset key: zero field");
    return v;
  }

  std::vector<MultisetEntry> entries_;
};

/// All multisets of cardinality m over {0..k-1}, in lexicographic order of
/// their sorted words.
inline std::vector<Multiset> multisets_of_size(std::size_t k, std::size_t m) {
  std::vector<Multiset> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  if (k == 0) return out;
  std::vector<std::size_t> word(m, 0);
  while (true) {
    out.push_back(Multiset::from_word(std::span<std::size_t const>(word)));
    std::size_t pos = m;
    while (pos > 0 && word[pos - 1] == k - 1) --pos;
    if (pos == 0) break;
    ++word[pos - 1];
    for (std::size_t j = pos; j < m; ++j) word[j] = word[pos - 1];
  }
  return out;
}

/// Multisets over {0..k-1} with cardinality at most n, ordered by
/// cardinality and then lexicographically.
inline std::vector<Multiset> multisets_up_to(std::size_t k, std::size_t n) {
  std::vector<Multiset> out;
  for (std::size_t m = 0; m <= n; ++m) {
    auto layer = multisets_of_size(k, m);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Multisets whose support is exactly {0..k-1} and whose cardinality is at
/// most n.
inline std::vector<Multiset> multisets_with_full_support(std::size_t k,
                                                         std::size_t n) {
  std::vector<Multiset> out;
  for (auto const& x : multisets_up_to(k, n))
    if (x.support_size() == k) out.push_back(x);
  return out;
}

}  // namespace numfun
