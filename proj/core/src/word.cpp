#include "braid/word.hpp"

#include <sstream>
#include <stdexcept>

namespace braid {

void validate(const BraidWord& u) {
  if (u.n < 1) throw std::invalid_argument("strand count must be >= 1");
  for (int letter : u.letters) {
    int i = letter < 0 ? -letter : letter;
    if (i < 1 || i > u.n - 1)
      throw std::invalid_argument("generator index " + std::to_string(letter) +
                                  " out of range for B_" + std::to_string(u.n));
  }
}

namespace {

int parse_token(const std::string& tok) {
  // Signed integer, or "sK" / "sK^-1".
  std::string body = tok;
  bool inverse = false;
  if (!body.empty() && (body[0] == 's' || body[0] == 'S')) {
    body = body.substr(1);
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      std::string exp = body.substr(caret + 1);
      if (exp != "-1") throw std::invalid_argument("malformed token: " + tok);
      inverse = true;
      body = body.substr(0, caret);
    }
  }
  size_t pos = 0;
  int value;
  try {
    value = std::stoi(body, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed token: " + tok);
  }
  if (pos != body.size()) throw std::invalid_argument("malformed token: " + tok);
  return inverse ? -value : value;
}

}  // namespace

BraidWord parse_word(const std::string& text, int n) {
  BraidWord u{n, {}};
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) u.letters.push_back(parse_token(tok));
  validate(u);
  return u;
}

std::string format_word(const BraidWord& u) {
  std::string out;
  for (size_t i = 0; i < u.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(u.letters[i]);
  }
  return out;
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw std::invalid_argument("mismatched strand counts");
  BraidWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

BraidWord invert(const BraidWord& u) {
  BraidWord r{u.n, {}};
  r.letters.reserve(u.letters.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

BraidWord embed(const BraidWord& u, int n) {
  BraidWord r{n, u.letters};
  validate(r);
  return r;
}

Permutation permutation_of(const BraidWord& u) {
  Permutation p(u.n);
  for (int letter : u.letters) {
    int i = letter < 0 ? -letter : letter;
    p = p.then(Permutation::transposition(u.n, i - 1));
  }
  return p;
}

BraidWord delta_word(int n) {
  BraidWord u{n, {}};
  for (int k = 1; k <= n - 1; ++k)
    for (int i = k; i >= 1; --i) u.letters.push_back(i);
  return u;
}

BraidWord fundamental_power(int n, int p) {
  BraidWord d = delta_word(n);
  if (p < 0) d = invert(d);
  BraidWord r{n, {}};
  for (int t = 0; t < (p < 0 ? -p : p); ++t) r = multiply(r, d);
  return r;
}

}  // namespace braid
