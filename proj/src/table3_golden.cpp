#include "mfcat/table3.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace mfcat {

namespace {

// Printed grids, row k, column k', "c^mult" notation.

const char* const kE6[6][6] = {
    {"0 4 6 10", "1 3 5^2 7 9", "2 4 6 8", "2 4 6 8", "3 7", "3 7"},
    {"1 3 5^2 7 9", "0 2^2 4^3 6^3 8^2 10", "1 3^2 5^2 7^2 9", "1 3^2 5^2 7^2 9", "2 4 6 8", "2 4 6 8"},
    {"2 4 6 8", "1 3^2 5^2 7^2 9", "0 2 4 6^2 8", "2 4^2 6 8 10", "1 5 7", "3 5 9"},
    {"2 4 6 8", "1 3^2 5^2 7^2 9", "2 4^2 6 8 10", "0 2 4 6^2 8", "3 5 9", "1 5 7"},
    {"3 7", "2 4 6 8", "1 5 7", "3 5 9", "0 6", "4 10"},
    {"3 7", "2 4 6 8", "3 5 9", "1 5 7", "4 10", "0 6"},
};

const char* const kE7[7][7] = {
    {"0 6 10 16", "1 5 7 9 11 15", "2 4 6 8^2 10 12 14", "3 7 9 13", "3 5 7 9 11 13", "4 6 10 12", "5 11"},
    {"1 5 7 9 11 15", "0 2 4 6^2 8^2 10^2 12 14 16", "1 3^2 5^2 7^3 9^3 11^2 13^2 15", "2 4 6 8^2 10 12 14", "2 4^2 6^2 8^2 10^2 12^2 14", "3 5^2 7 9 11^2 13", "4 6 10 12"},
    {"2 4 6 8^2 10 12 14", "1 3^2 5^2 7^3 9^3 11^2 13^2 15", "0 2^2 4^3 6^4 8^4 10^4 12^3 14^2 16", "1 3 5^2 7^2 9^2 11^2 13 15", "1 3^2 5^3 7^3 9^3 11^3 13^2 15", "2 4^2 6^2 8^2 10^2 12^2 14", "3 5 7 9 11 13"},
    {"3 7 9 13", "2 4 6 8^2 10 12 14", "1 3 5^2 7^2 9^2 11^2 13 15", "0 4 6 8 10 12 16", "2 4 6^2 8 10^2 12 14", "3 5 7 9 11 13", "4 8 12"},
    {"3 5 7 9 11 13", "2 4^2 6^2 8^2 10^2 12^2 14", "1 3^2 5^3 7^3 9^3 11^3 13^2 15", "2 4 6^2 8 10^2 12 14", "0 2 4^2 6^2 8^3 10^2 12^2 14 16", "1 3 5 7^2 9^2 11 13 15", "2 6 8 10 14"},
    {"4 6 10 12", "3 5^2 7 9 11^2 13", "2 4^2 6^2 8^2 10^2 12^2 14", "3 5 7 9 11 13", "1 3 5 7^2 9^2 11 13 15", "0 2 6 8^2 10 14 16", "1 7 9 15"},
    {"5 11", "4 6 10 12", "3 5 7 9 11 13", "4 8 12", "2 6 8 10 14", "1 7 9 15", "0 8 16"},
};

const char* const kE8[8][8] = {
    {"0 10 18 28", "1 9 11 17 19 27", "2 8 10 12 16 18 20 26", "3 7 9 11 13 15 17 19 21 25", "4 6 8 10 12 14^2 16 18 20 22 24", "5 9 13 15 19 23", "5 7 11 13 15 17 21 23", "6 12 16 22"},
    {"1 9 11 17 19 27", "0 2 8 10^2 12 16 18^2 20 26 28", "1 3 7 9^2 11^2 13 15 17^2 19^2 21 25 27", "2 4 6 8^2 10^2 12^2 14^2 16^2 18^2 20^2 22 24 26", "3 5^2 7^2 9^2 11^2 13^3 15^3 17^2 19^2 21^2 23^2 25", "4 6 8 10 12 14^2 16 18 20 22 24", "4 6^2 8 10 12^2 14^2 16^2 18 20 22^2 24", "5 7 11 13 15 17 21 23"},
    {"2 8 10 12 16 18 20 26", "1 3 7 9^2 11^2 13 15 17^2 19^2 21 25 27", "0 2 4 6 8^2 10^3 12^2 14^2 16^2 18^3 20^2 22 24 26 28", "1 3 5^2 7^2 9^2 11^3 13^3 15^3 17^3 19^3 21^2 23^2 25 27", "2 4^2 6^3 8^3 10^3 12^4 16^4 18^3 20^3 22^3 24^2 26", "3 5 7^2 9 11^2 13^2 15^2 17^2 19 21^2 23 25", "3 5^2 7^2 9^2 11^2 13^3 15^3 17^2 19^2 21^2 23^2 25", "4 6 8 10 12 14^2 16 18 20 22 24"},
    {"3 7 9 11 13 15 17 19 21 25", "2 4 6 8^2 10^2 12^2 14^2 16^2 18^2 20^2 22 24 26", "1 3 5^2 7^2 9^2 11^3 13^3 15^3 17^3 19^3 21^2 23^2 25 27", "0 2 4^2 6^3 8^3 10^4 12^4 14^4 16^4 18^4 20^3 22^3 24^2 26 28", "1 3^2 5^3 7^4 9^4 11^5 13^5 15^5 17^5 19^4 21^4 23^3 25^2 27", "2 4 6^2 8^2 10^2 12^3 14^2 16^3 18^2 20^2 22^2 24 26", "2 4^2 6^2 8^3 10^3 12^3 14^4 16^3 18^3 20^3 22^2 24^2 26", "3 5 7 9^2 11 13^2 15^2 17 19^2 21 23 25"},
    {"4 6 8 10 12 14^2 16 18 20 22 24", "3 5^2 7^2 9^2 11^2 13^3 15^3 17^2 19^2 21^2 23^2 25", "2 4^2 6^3 8^3 10^3 12^4 16^4 18^3 20^3 22^3 24^2 26", "1 3^2 5^3 7^4 9^4 11^5 13^5 15^5 17^5 19^4 21^4 23^3 25^2 27", "0 2^2 4^3 6^4 8^5 10^6 12^6 14^6 16^6 18^6 20^5 22^4 24^3 26^2 28", "1 3 5^2 7^2 9^3 11^3 13^3 15^3 17^3 19^3 21^2 23^2 25 27", "1 3^2 5^2 7^3 9^4 11^4 13^4 15^4 17^4 19^4 21^3 23^2 25^2 27", "2 4 6 8^2 10^2 12^2 14^2 16^2 18^2 20^2 22 24 26"},
    {"5 9 13 15 19 23", "4 6 8 10 12 14^2 16 18 20 22 24", "3 5 7^2 9 11^2 13^2 15^2 17^2 19 21^2 23 25", "2 4 6^2 8^2 10^2 12^3 14^2 16^3 18^2 20^2 22^2 24 26", "1 3 5^2 7^2 9^3 11^3 13^3 15^3 17^3 19^3 21^2 23^2 25 27", "0 4 6 8 10^2 12 14^2 16 18^2 20 22 24 28", "2 4 6 8^2 10^2 12^2 14^2 16^2 18^2 20^2 22 24 26", "3 7 9 11 13 15 17 19 21 25"},
    {"5 7 11 13 15 17 21 23", "4 6^2 8 10 12^2 14^2 16^2 18 20 22^2 24", "3 5^2 7^2 9^2 11^2 13^3 15^3 17^2 19^2 21^2 23^2 25", "2 4^2 6^2 8^3 10^3 12^3 14^4 16^3 18^3 20^3 22^2 24^2 26", "1 3^2 5^2 7^3 9^4 11^4 13^4 15^4 17^4 19^4 21^3 23^2 25^2 27", "2 4 6 8^2 10^2 12^2 14^2 16^2 18^2 20^2 22 24 26", "0 2 4 6^2 8^2 10^3 12^3 14^2 16^3 18^3 20^2 22^2 24 26 28", "1 5 7 9 11^2 13 15 17^2 19 21 23 27"},
    {"6 12 16 22", "5 7 11 13 15 17 21 23", "4 6 8 10 12 14^2 16 18 20 22 24", "3 5 7 9^2 11 13^2 15^2 17 19^2 21 23 25", "2 4 6 8^2 10^2 12^2 14^2 16^2 18^2 20^2 22 24 26", "3 7 9 11 13 15 17 19 21 25", "1 5 7 9 11^2 13 15 17^2 19 21 23 27", "0 6 10 12 16 18 22 28"},
};

const char* printed(int l, int k, int kp) {
  switch (l) {
    case 6: return kE6[k - 1][kp - 1];
    case 7: return kE7[k - 1][kp - 1];
    case 8: return kE8[k - 1][kp - 1];
    default: throw std::invalid_argument("e_printed: l must be 6, 7 or 8");
  }
}

void add_run(Multiset& m, int from, int to) {
  for (int c = from; c <= to; c += 2) ++m[c];
}

}  // namespace

Multiset parse_multiset(const std::string& s) {
  Multiset out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = s.find(' ', pos);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(pos, end - pos);
    pos = end;
    std::size_t caret = tok.find('^');
    try {
      std::size_t used = 0;
      int c = std::stoi(tok.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? tok.size() : caret)) throw std::invalid_argument(tok);
      int mult = 1;
      if (caret != std::string::npos) {
        mult = std::stoi(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1 || mult <= 0) throw std::invalid_argument(tok);
      }
      out[c] += mult;
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_multiset: bad token '" + tok + "'");
    }
  }
  return out;
}

const std::vector<Erratum>& table3_errata() {
  static const std::vector<Erratum> errata = [] {
    std::vector<Erratum> v;
    const std::string c34 = "1 3 5^2 7^2 9^3 11^3 13^3 15^3 17^3 19^3 21^2 23^2 25 27";
    const std::string c35 = "2 4^2 6^3 8^3 10^3 12^4 14^4 16^4 18^3 20^3 22^3 24^2 26";
    v.push_back({8, 3, 4, kE8[2][3], c34});
    v.push_back({8, 4, 3, kE8[3][2], c34});
    v.push_back({8, 3, 5, kE8[2][4], c35});
    v.push_back({8, 5, 3, kE8[4][2], c35});
    return v;
  }();
  return errata;
}

std::string e_printed(int l, int k, int kp) {
  if (k < 1 || k > l || kp < 1 || kp > l) throw std::invalid_argument("e_printed: vertex out of range");
  return printed(l, k, kp);
}

Multiset a_formula(int l, int k, int kp) {
  if (k < 1 || k > l || kp < 1 || kp > l) throw std::invalid_argument("a_formula: vertex out of range");
  Multiset m;
  add_run(m, std::abs(kp - k), l - 1 - std::abs((l - 1) - (k + kp - 2)));
  return m;
}

Multiset d_formula(int l, int k, int kp) {
  if (l < 4 || k < 1 || k > l || kp < 1 || kp > l) throw std::invalid_argument("d_formula: vertex out of range");
  if (k > kp) std::swap(k, kp);
  Multiset m;
  bool leaf_k = k >= l - 1, leaf_kp = kp >= l - 1;
  if (k == 1) {
    if (kp == 1) {
      add_run(m, 0, 0);
      add_run(m, 2 * l - 4, 2 * l - 4);
    } else if (!leaf_kp) {
      add_run(m, kp - 1, kp - 1);
      add_run(m, 2 * l - 3 - kp, 2 * l - 3 - kp);
    } else {
      add_run(m, l - 2, l - 2);
    }
  } else if (!leaf_k && !leaf_kp) {
    add_run(m, kp - k, k + kp - 2);
    add_run(m, 2 * l - 2 - (k + kp), 2 * l - 4 - (kp - k));
  } else if (!leaf_k) {
    add_run(m, l - 1 - k, l - 3 + k);
  } else {
    bool same = k == kp;
    bool even = l % 2 == 0;
    int top = (same == even) ? 2 * l - 4 : 2 * l - 6;
    for (int c = same ? 0 : 2; c <= top; c += 4) ++m[c];
  }
  return m;
}

Multiset golden_multiset(const ADEType& t, int k, int kp) {
  t.validate();
  if (k < 1 || k > t.l || kp < 1 || kp > t.l) throw std::invalid_argument("golden_multiset: vertex out of range");
  switch (t.family) {
    case Family::A: return a_formula(t.l, k, kp);
    case Family::D: return d_formula(t.l, k, kp);
    case Family::E: break;
  }
  for (const auto& e : table3_errata())
    if (e.l == t.l && e.k == k && e.kp == kp) return parse_multiset(e.corrected);
  return parse_multiset(printed(t.l, k, kp));
}

}  // namespace mfcat
