#include "k3walls/rational.hpp"

#include <cctype>

namespace k3walls {

Int rfloor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int rceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sign(const Rat& q) { return sgn(q); }

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // Reject anything that is not an optionally-signed integer or p/q pair;
  // in particular floats ("0.5", "1e3") are configuration errors.
  auto is_int_token = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_int_token(num) || !is_int_token(den)) return std::nullopt;
  Int n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) return std::nullopt;
  if (d == 0) return std::nullopt;
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_pq(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_str(const Rat& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return rat_pq(q);
}

double to_double(const Rat& q) { return q.get_d(); }

} // namespace k3walls
