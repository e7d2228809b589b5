#include "apa/tl.hpp"

#include <map>
#include <unordered_map>

#include "apa/diagram.hpp"

namespace apa {

namespace {

std::string encode(const std::vector<int>& partner) {
  std::string s;
  s.reserve(partner.size());
  for (int p : partner) s.push_back(char('a' + p));
  return s;
}

struct Table {
  std::unordered_map<std::string, long> index;
};

Table& table_for(int k) {
  static std::map<int, Table> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  Table t;
  const auto& all = diagram::noncrossing_matchings(k);
  for (long i = 0; i < long(all.size()); ++i) t.index.emplace(encode(all[i]), i);
  return cache.emplace(k, std::move(t)).first->second;
}

}  // namespace

TLBackend::TLBackend(const Field* f, Rational delta) : delta_rat_(std::move(delta)) {
  require(sgn(delta_rat_) > 0, "TL modulus must be positive");
  Scalar d(f, delta_rat_);
  // delta^{1/2} must live in the field: rational, or theta with theta^2=delta.
  Scalar dh(f);
  mpz_class num = delta_rat_.get_num(), den = delta_rat_.get_den();
  mpz_class sn, sd;
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    dh = Scalar(f, Rational(sn, sd));
  } else {
    require(f->degree() == 2 && f->theta_power() == delta_rat_,
            "field does not contain delta^{1/2}");
    dh = Scalar::theta(f);
  }
  init_scalars(f, d, dh);
}

long TLBackend::dim(Color c) const { return long(diagram::noncrossing_matchings(c.k).size()); }

const std::vector<int>& TLBackend::matching(Color c, long b) const {
  return diagram::noncrossing_matchings(c.k)[b];
}

long TLBackend::index_of(int k, const std::vector<int>& partner) const {
  auto& t = table_for(k);
  auto it = t.index.find(encode(partner));
  require(it != t.index.end(), "TL: not a non-crossing matching");
  return it->second;
}

PAElement TLBackend::contract_basis(Color cx, long bx, Color cy, long by, int m) const {
  auto glued = diagram::glue_matchings(matching(cx, bx), matching(cy, by), m);
  Color out{cx.sign, cx.k + cy.k - m};
  PAElement e(this, out);
  Scalar coeff = Scalar::one(field());
  for (int t = 0; t < glued.loops; ++t) coeff *= delta();
  e.add_term(index_of(out.k, glued.matching), coeff);
  return e;
}

PAElement TLBackend::rotate_basis(Color c, long b, int dir) const {
  Color out = c.flipped();
  PAElement e(this, out);
  e.add_term(index_of(c.k, diagram::rotate_matching(matching(c, b), dir)), Scalar::one(field()));
  return e;
}

PAElement TLBackend::reflect_basis(Color c, long b) const {
  PAElement e(this, c);
  e.add_term(index_of(c.k, diagram::reflect_matching(matching(c, b))), Scalar::one(field()));
  return e;
}

PAElement TLBackend::diagram_element(Color c, const std::vector<int>& partner) const {
  require(int(partner.size()) == 2 * c.k, "diagram_element: size mismatch");
  require(diagram::is_valid_matching(partner) && diagram::is_noncrossing(partner),
          "diagram_element: not a planar matching");
  PAElement e(this, c);
  e.add_term(index_of(c.k, partner), Scalar::one(field()));
  return e;
}

Scalar TLBackend::closure_scalar(Color c, long) const {
  require(c.k == 0, "closure_scalar: color must be eps0");
  return Scalar::one(field());
}

}  // namespace apa
