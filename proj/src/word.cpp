#include "fsimple/word.hpp"

#include <algorithm>
#include <cctype>

#include "fsimple/errors.hpp"

namespace fsimple {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == letter_inv(l))
    out.pop_back();
  else
    out.push_back(l);
}

// Compares rotation r of a against b, both of length n.
int compare_rotation(const std::vector<Letter>& a, std::size_t r, const std::vector<Letter>& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Letter x = a[(r + i) % n];
    if (x != b[i]) return x < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<Letter> inverse_letters(const std::vector<Letter>& w) {
  std::vector<Letter> r(w.rbegin(), w.rend());
  for (Letter& l : r) l = letter_inv(l);
  return r;
}

// True iff w (cyclically reduced) is its own canonical representative.
bool is_canonical(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r)
    if (compare_rotation(w, r, w) < 0) return false;
  const auto inv = inverse_letters(w);
  for (std::size_t r = 0; r < n; ++r)
    if (compare_rotation(inv, r, w) < 0) return false;
  return true;
}

}  // namespace

Word::Word(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::islower(u))
      ls.push_back(make_letter(ch - 'a', false));
    else if (std::isupper(u))
      ls.push_back(make_letter(ch - 'A', true));
    else
      throw InvalidArgument("invalid word character '" + std::string(1, ch) + "'");
  }
  return Word(ls);
}

int Word::max_gen() const noexcept {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, letter_gen(l));
  return m;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_)
    s.push_back(static_cast<char>((letter_inverse(l) ? 'A' : 'a') + letter_gen(l)));
  return s;
}

Word Word::inverse() const {
  Word r;
  r.letters_ = inverse_letters(letters_);
  return r;
}

Word Word::pow(int n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word r;
  for (int i = 0; i < std::abs(n); ++i) r = r * base;
  return r;
}

Word Word::prefix(std::size_t n) const {
  Word r;
  r.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
  return r;
}

Word operator*(const Word& u, const Word& v) {
  Word r = u;
  for (Letter l : v.letters_) push_reduced(r.letters_, l);
  return r;
}

bool operator<(const Word& u, const Word& v) noexcept {
  if (u.size() != v.size()) return u.size() < v.size();
  return u.letters_ < v.letters_;
}

Word cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i] == letter_inv(l[j - 1])) ++i, --j;
  return Word(std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(i),
                                  l.begin() + static_cast<std::ptrdiff_t>(j)));
}

bool is_cyclically_reduced(const Word& w) noexcept {
  return w.size() < 2 || w[0] != letter_inv(w[w.size() - 1]);
}

Word canonical_cyclic(const Word& w) {
  const Word c = cyclic_reduce(w);
  const std::size_t n = c.size();
  if (n == 0) return c;
  const auto& a = c.letters();
  const auto inv = inverse_letters(a);
  std::vector<Letter> best = a;
  std::vector<Letter> cand(n);
  for (const auto* src : {&a, &inv}) {
    for (std::size_t r = 0; r < n; ++r) {
      if (compare_rotation(*src, r, best) < 0) {
        for (std::size_t i = 0; i < n; ++i) cand[i] = (*src)[(r + i) % n];
        best = cand;
      }
    }
  }
  return Word(best);
}

int cyclic_period_count(const Word& cyclic) {
  const Word c = cyclic_reduce(cyclic);
  const std::size_t n = c.size();
  if (n == 0) return 0;
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = c[i] == c[i - p];
    if (ok) return static_cast<int>(n / p);
  }
  return 1;
}

ConjClass ConjClass::of(const Word& w) {
  ConjClass k;
  k.canonical = canonical_cyclic(w);
  k.primitive = cyclic_period_count(k.canonical) <= 1;
  return k;
}

ConjClass ConjClass::root() const {
  const int k = cyclic_period_count(canonical);
  if (k <= 1) return *this;
  return of(canonical.prefix(canonical.size() / static_cast<std::size_t>(k)));
}

std::vector<ConjClass> enumerate_cyclic_classes(int ngens, int radius) {
  std::vector<ConjClass> out;
  const int nl = 2 * ngens;
  std::vector<Letter> w;
  for (int len = 1; len <= radius; ++len) {
    w.assign(static_cast<std::size_t>(len), 0);
    // Depth-first in lexicographic order; a rotation that already beats the
    // prefix rules out every completion.
    auto rec = [&](auto&& self, int k) -> void {
      if (k == len) {
        if (len > 1 && w[0] == letter_inv(w[static_cast<std::size_t>(len - 1)])) return;
        if (!is_canonical(w)) return;
        ConjClass c;
        c.canonical = Word(w);
        c.primitive = cyclic_period_count(c.canonical) <= 1;
        out.push_back(std::move(c));
        return;
      }
      for (int code = 0; code < nl; ++code) {
        const auto l = static_cast<Letter>(code);
        if (k > 0) {
          if (l == letter_inv(w[static_cast<std::size_t>(k - 1)])) continue;
          if (l < w[0] || letter_inv(l) < w[0]) continue;
        } else if (letter_inv(l) < l) {
          continue;  // an inverse letter first would lose to its own inverse word
        }
        w[static_cast<std::size_t>(k)] = l;
        bool dead = false;
        for (int i = 1; i <= k && !dead; ++i) {
          for (int j = 0; i + j <= k; ++j) {
            const Letter x = w[static_cast<std::size_t>(i + j)], y = w[static_cast<std::size_t>(j)];
            if (x != y) {
              dead = x < y;
              break;
            }
          }
        }
        if (!dead) self(self, k + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

int mod3_class(const Word& w, int dualIndex) {
  int s = 0;
  for (Letter l : w.letters())
    if (letter_gen(l) == dualIndex) s += letter_inverse(l) ? -1 : 1;
  return ((s % 3) + 3) % 3;
}

}  // namespace fsimple
