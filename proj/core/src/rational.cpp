#include "symnorm/rational.hpp"

#include <stdexcept>

namespace symnorm {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto check = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw std::invalid_argument("malformed rational '" + text + "'");
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw std::invalid_argument("malformed rational '" + text + "'");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational '" + text + "'");
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check(num, true);
  check(den, false);
  if (num[0] == '+') num = num.substr(1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rat q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat floor_rat(const Rat& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rat(r);
}

Rat ceil_rat(const Rat& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rat(r);
}

int frac_flag(const Rat& q) { return is_integer(q) ? 0 : 1; }

Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::domain_error("expected an integer, got " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer out of range");
  return q.get_num().get_si();
}

Int floor_int(const Rat& q) { return to_int(floor_rat(q)); }
Int ceil_int(const Rat& q) { return to_int(ceil_rat(q)); }

}  // namespace symnorm
