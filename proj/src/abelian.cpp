#include "cayci/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cayci {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

bool is_prime_power(std::int64_t m) {
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      return m == 1;
    }
  }
  return m > 1;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_) {
    if (m < 2) throw std::invalid_argument("abelian group: every cyclic factor needs order >= 2");
    if (order_ > (std::int64_t{1} << 40) / m) throw std::invalid_argument("abelian group: order too large");
    order_ *= m;
  }
}

bool FiniteAbelianGroup::is_primary() const { return std::all_of(moduli_.begin(), moduli_.end(), is_prime_power); }

Element FiniteAbelianGroup::generator(int i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

bool FiniteAbelianGroup::contains(const Element& x) const {
  if (x.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= moduli_[i]) return false;
  return true;
}

Element FiniteAbelianGroup::reduce(Element a) const {
  if (a.size() != moduli_.size()) throw std::invalid_argument("abelian group: element has wrong length");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i], moduli_[i]);
  return a;
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % moduli_[i];
  return c;
}

Element FiniteAbelianGroup::negate(const Element& a) const {
  Element c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (moduli_[i] - a[i]) % moduli_[i];
  return c;
}

Element FiniteAbelianGroup::scale(std::int64_t c, const Element& a) const {
  Element out(moduli_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(mod(c, moduli_[i]) * a[i], moduli_[i]);
  return out;
}

std::int64_t FiniteAbelianGroup::element_order(const Element& a) const {
  std::int64_t result = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t o = moduli_[i] / std::gcd(moduli_[i], a[i]);
    result = std::lcm(result, o);
  }
  return result;
}

std::int64_t FiniteAbelianGroup::encode(const Element& a) const {
  std::int64_t code = 0;
  for (std::size_t i = 0; i < a.size(); ++i) code = code * moduli_[i] + a[i];
  return code;
}

Element FiniteAbelianGroup::decode(std::int64_t code) const {
  Element a(moduli_.size());
  for (std::size_t i = a.size(); i-- > 0;) {
    a[i] = code % moduli_[i];
    code /= moduli_[i];
  }
  return a;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t c = 0; c < order_; ++c) out.push_back(decode(c));
  return out;
}

std::string FiniteAbelianGroup::to_string() const {
  if (moduli_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) s += (i ? " x Z" : "Z") + std::to_string(moduli_[i]);
  return s;
}

GroupHom::GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.rank())
    throw std::invalid_argument("homomorphism: one image per generator is required");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    images_[i] = target_.reduce(images_[i]);
    if (source_.moduli()[i] % target_.element_order(images_[i]) != 0)
      throw std::invalid_argument("homomorphism: image order does not divide the generator order");
  }
}

GroupHom GroupHom::identity(const FiniteAbelianGroup& g) {
  std::vector<Element> images;
  for (int i = 0; i < g.rank(); ++i) images.push_back(g.generator(i));
  return GroupHom(g, g, std::move(images));
}

Element GroupHom::operator()(const Element& x) const {
  Element y = target_.zero();
  for (std::size_t i = 0; i < images_.size(); ++i) y = target_.add(y, target_.scale(x[i], images_[i]));
  return y;
}

bool GroupHom::is_injective() const {
  const auto zero = target_.zero();
  for (std::int64_t c = 1; c < source_.order(); ++c)
    if ((*this)(source_.decode(c)) == zero) return false;
  return true;
}

bool GroupHom::is_bijective() const { return source_.order() == target_.order() && is_injective(); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target() == g.source())) throw std::invalid_argument("compose: incompatible homomorphisms");
  std::vector<Element> images;
  for (const auto& x : f.images()) images.push_back(g(x));
  return GroupHom(f.source(), g.target(), std::move(images));
}

std::vector<GroupHom> automorphisms(const FiniteAbelianGroup& g) {
  std::vector<std::vector<Element>> candidates(g.rank());
  for (int i = 0; i < g.rank(); ++i)
    for (const auto& x : g.elements())
      if (g.moduli()[i] % g.element_order(x) == 0) candidates[i].push_back(x);

  std::vector<GroupHom> out;
  std::vector<Element> images(g.rank());
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == g.rank()) {
      GroupHom h(g, g, images);
      if (h.is_bijective()) out.push_back(std::move(h));
      return;
    }
    for (const auto& x : candidates[i]) {
      images[i] = x;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

FiniteGraph cayley_graph(const FiniteAbelianGroup& g, const std::vector<Element>& s) {
  std::vector<Label> labels = g.elements();
  std::vector<Arc> arcs;
  for (std::int64_t c = 0; c < g.order(); ++c)
    for (std::size_t j = 0; j < s.size(); ++j)
      arcs.push_back({static_cast<int>(c), static_cast<int>(g.encode(g.add(labels[c], g.reduce(s[j])))),
                      static_cast<int>(j)});
  return FiniteGraph(std::move(labels), std::move(arcs));
}

}  // namespace cayci
