#include "diaghom/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace diaghom {

AlgebraSpec AlgebraSpec::make(const FamilySpec& family, const RingSpec& ring,
                              const AlgebraParams& params) {
  auto take = [&](const char* name, const std::optional<Scalar>& given,
                  bool used) -> Scalar {
    require(!used || given.has_value(), Errc::BadArgument,
            std::string(name) + " required for " + family.to_string());
    require(used || !given.has_value(), Errc::BadArgument,
            std::string(name) + " not used by " + family.to_string());
    return used ? *given : Scalar();
  };
  AlgebraSpec spec;
  spec.family_ = family;
  spec.ring_ = ring;
  spec.delta_ = take("delta", params.delta, family.uses_delta());
  spec.epsilon_ = take("epsilon", params.epsilon, family.uses_epsilon());
  spec.gamma_ = take("gamma", params.gamma, family.uses_gamma());
  return spec;
}

bool AlgebraSpec::operator==(const AlgebraSpec& o) const {
  return family_ == o.family_ && ring_ == o.ring_ && delta_ == o.delta_ &&
         epsilon_ == o.epsilon_ && gamma_ == o.gamma_;
}

std::string AlgebraSpec::to_string() const {
  std::ostringstream os;
  os << family_.to_string() << " over " << ring_.to_string();
  if (family_.uses_delta()) os << ", delta=" << delta_.to_string();
  if (family_.uses_epsilon()) os << ", epsilon=" << epsilon_.to_string();
  if (family_.uses_gamma()) os << ", gamma=" << gamma_.to_string();
  return os.str();
}

AlgebraElement AlgebraElement::basis(const AlgebraSpec& spec, const Diagram& d) {
  require_member(d, spec.family());
  AlgebraElement x(spec);
  x.add_term(d, Ring(spec.ring()).one());
  return x;
}

Scalar AlgebraElement::coefficient(const Diagram& d) const {
  const auto it = terms_.find(d);
  return it == terms_.end() ? Scalar() : it->second;
}

AlgebraElement& AlgebraElement::add_term(const Diagram& d, const Scalar& c) {
  if (c.is_zero()) return *this;
  const Ring ring(spec_.ring());
  auto [it, fresh] = terms_.emplace(d, c);
  if (!fresh) {
    it->second = ring.add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return spec_ == o.spec_ && terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!(c == Ring(spec_.ring()).one())) os << c.to_string() << "*";
    os << "[" << d.to_string() << "]";
  }
  return os.str();
}

AlgebraElement identity(const AlgebraSpec& spec) {
  const Ring ring(spec.ring());
  AlgebraElement x(spec);
  const int n = spec.family().n;
  if (spec.family().family != Family::DiluteTL) {
    x.add_term(Diagram::identity(n), ring.one());
    return x;
  }
  // Dilute unit: the sum of every sub-identity diagram.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Diagram d(n);
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) d.connect(i + 1, -(i + 1));
    x.add_term(d, ring.one());
  }
  return x;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  require(x.spec() == y.spec(), Errc::SizeMismatch, "algebra specs differ");
  AlgebraElement out = x;
  for (const auto& [d, c] : y.terms()) out.add_term(d, c);
  return out;
}

AlgebraElement scale(const Scalar& c, const AlgebraElement& x) {
  const Ring ring(x.spec().ring());
  AlgebraElement out(x.spec());
  for (const auto& [d, coeff] : x.terms()) out.add_term(d, ring.mul(c, coeff));
  return out;
}

Scalar composition_scalar(const AlgebraSpec& spec, const CompositionResult& r) {
  const Ring ring(spec.ring());
  Scalar s = ring.one();
  if (spec.family().uses_delta()) s = ring.mul(s, ring.pow(spec.delta(), r.loop_count));
  if (spec.family().uses_epsilon())
    s = ring.mul(s, ring.pow(spec.epsilon(), r.isolated_middle_count));
  if (spec.family().uses_gamma())
    s = ring.mul(s, ring.pow(spec.gamma(), r.blobbed_loop_count));
  return s;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  require(x.spec() == y.spec(), Errc::SizeMismatch, "algebra specs differ");
  const AlgebraSpec& spec = x.spec();
  const Ring ring(spec.ring());
  AlgebraElement out(spec);
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      const CompositionResult r = compose(dx, dy, spec.family());
      if (r.is_zero) continue;
      out.add_term(r.diagram, ring.mul(ring.mul(cx, cy), composition_scalar(spec, r)));
    }
  }
  return out;
}

bool augments_to_one(const FamilySpec& fam, const Diagram& d) {
  switch (fam.family) {
    case Family::Blob:
      return d.is_identity();
    case Family::DiluteTL:
      return d.propagating_count() == fam.n;
    default:
      return is_permutation_diagram(d);
  }
}

Scalar augmentation(const AlgebraElement& x) {
  const Ring ring(x.spec().ring());
  Scalar total = ring.zero();
  for (const auto& [d, c] : x.terms())
    if (augments_to_one(x.spec().family(), d)) total = ring.add(total, c);
  return total;
}

bool is_algebra_map_augmentation(const AlgebraSpec& spec) {
  const Ring ring(spec.ring());
  require(ring.is_one(augmentation(identity(spec))), Errc::Malformed,
          "augmentation of the unit is not 1 in " + spec.to_string());
  const auto basis = enumerate_family(spec.family());
  for (const Diagram& d1 : basis) {
    const AlgebraElement x = AlgebraElement::basis(spec, d1);
    const Scalar tx = augmentation(x);
    for (const Diagram& d2 : basis) {
      const AlgebraElement y = AlgebraElement::basis(spec, d2);
      const Scalar lhs = augmentation(multiply(x, y));
      const Scalar rhs = ring.mul(tx, augmentation(y));
      require(lhs == rhs, Errc::Malformed,
              "augmentation is not multiplicative on " + d1.to_string() + " and " +
                  d2.to_string() + " in " + spec.to_string());
    }
  }
  return true;
}

bool in_ideal(const Diagram& d, int level, const FamilySpec& fam) {
  if (level < 0) return false;
  require(level <= max_ideal_level(fam), Errc::BadArgument, "ideal level out of range");
  if (fam.family == Family::Blob) {
    if (level == 0) return d.propagating_count() == 0;
    if (d.propagating_count() < level) return true;
    if (d.propagating_count() != level) return false;
    if (d.blob_count() == 0) return false;
    for (const auto& e : d.edge_list())  // top-most propagating edge must carry a blob
      if (e.a < d.n() && e.b >= d.n()) return e.blobbed;
    return false;
  }
  return d.propagating_count() <= level;
}

int max_ideal_level(const FamilySpec& fam) {
  return fam.family == Family::Blob ? fam.n : fam.n - 1;
}

GroupSpec GroupSpec::symmetric(int n) {
  require(n >= 0, Errc::BadArgument, "negative symmetric rank");
  GroupSpec g;
  g.kind = GroupKind::Symmetric;
  g.n = n;
  return g;
}

GroupSpec GroupSpec::cyclic(int n) {
  require(n >= 1, Errc::BadArgument, "cyclic order must be positive");
  GroupSpec g;
  g.kind = GroupKind::Cyclic;
  g.n = n;
  return g;
}

GroupSpec GroupSpec::product_symmetric(int r, int s) {
  require(r >= 0 && s >= 0, Errc::BadArgument, "negative symmetric rank");
  GroupSpec g;
  g.kind = GroupKind::ProductSymmetric;
  g.r = r;
  g.s = s;
  return g;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "trivial" || t == "1") return trivial();
  auto number = [&](std::size_t from, std::size_t to) {
    require(from < to, Errc::UnknownGroup, "cannot parse group: " + text);
    int v = 0;
    for (std::size_t i = from; i < to; ++i) {
      require(std::isdigit(static_cast<unsigned char>(t[i])), Errc::UnknownGroup,
              "cannot parse group: " + text);
      v = 10 * v + (t[i] - '0');
    }
    return v;
  };
  const std::size_t x = t.find("xs");
  if (t.size() >= 2 && t[0] == 's' && x != std::string::npos)
    return product_symmetric(number(1, x), number(x + 2, t.size()));
  if (!t.empty() && t[0] == 's') return symmetric(number(1, t.size()));
  if (!t.empty() && t[0] == 'c') return cyclic(number(1, t.size()));
  fail(Errc::UnknownGroup, "cannot parse group: " + text);
}

std::size_t GroupSpec::order() const {
  auto fact = [](int m) {
    std::size_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::size_t>(i);
    return f;
  };
  switch (kind) {
    case GroupKind::Trivial:
      return 1;
    case GroupKind::Symmetric:
      return fact(n);
    case GroupKind::Cyclic:
      return static_cast<std::size_t>(n);
    case GroupKind::ProductSymmetric:
      return fact(r) * fact(s);
  }
  return 1;
}

bool GroupSpec::operator==(const GroupSpec& o) const {
  return kind == o.kind && n == o.n && r == o.r && s == o.s;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case GroupKind::Trivial:
      return "trivial";
    case GroupKind::Symmetric:
      return "s" + std::to_string(n);
    case GroupKind::Cyclic:
      return "c" + std::to_string(n);
    case GroupKind::ProductSymmetric:
      return "s" + std::to_string(r) + "xs" + std::to_string(s);
  }
  return "trivial";
}

namespace {

// Image vectors of every permutation of {1..m}, identity first (lex order).
std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> image(static_cast<std::size_t>(m));
  std::iota(image.begin(), image.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<int> compose_images(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i]) - 1];
  return c;
}

}  // namespace

struct BasedAlgebra::Impl {
  enum class Kind { Diagrams, Group } kind = Kind::Diagrams;
  Ring ring{RingSpec::integers()};
  std::string description;

  // diagram backend (level == -1 means the full algebra)
  std::optional<AlgebraSpec> spec;
  int level = -1;
  std::vector<Diagram> basis;
  std::map<std::vector<int32_t>, int> index;

  // group backend
  GroupSpec group;
  std::vector<std::vector<int>> elements;
  std::map<std::vector<int>, int> element_index;

  Row unit_row;
  std::vector<Scalar> aug;
  mutable std::map<std::pair<int, int>, Row> cache;

  Row compute(int i, int j) const {
    if (kind == Kind::Group) {
      std::vector<int> prod;
      if (group.kind == GroupKind::Cyclic)
        prod = {(elements[static_cast<std::size_t>(i)][0] +
                 elements[static_cast<std::size_t>(j)][0]) %
                group.n};
      else if (group.kind == GroupKind::Trivial)
        prod = elements[0];
      else
        prod = compose_images(elements[static_cast<std::size_t>(i)],
                              elements[static_cast<std::size_t>(j)]);
      return {{element_index.at(prod), ring.one()}};
    }
    const CompositionResult r = compose(basis[static_cast<std::size_t>(i)],
                                        basis[static_cast<std::size_t>(j)], spec->family());
    if (r.is_zero) return {};
    if (level >= 0 && in_ideal(r.diagram, level, spec->family())) return {};
    const Scalar c = composition_scalar(*spec, r);
    if (c.is_zero()) return {};
    return {{index.at(r.diagram.canonical_key()), c}};
  }
};

BasedAlgebra BasedAlgebra::quotient(const AlgebraSpec& spec, int ideal_level) {
  require(ideal_level >= -1 && ideal_level <= max_ideal_level(spec.family()), Errc::BadArgument,
          "ideal level out of range for " + spec.family().to_string());
  BasedAlgebra a;
  a.impl_ = std::make_shared<Impl>();
  Impl& im = *a.impl_;
  im.kind = Impl::Kind::Diagrams;
  im.ring = Ring(spec.ring());
  im.spec = spec;
  im.level = ideal_level;
  for (const Diagram& d : enumerate_family(spec.family())) {
    if (ideal_level >= 0 && in_ideal(d, ideal_level, spec.family())) continue;
    im.index.emplace(d.canonical_key(), static_cast<int>(im.basis.size()));
    im.basis.push_back(d);
  }
  const AlgebraElement unit = identity(spec);
  for (const auto& [d, c] : unit.terms()) {
    const auto it = im.index.find(d.canonical_key());
    if (it != im.index.end()) im.unit_row.push_back({it->second, c});
  }
  im.aug.reserve(im.basis.size());
  for (const Diagram& d : im.basis)
    im.aug.push_back(augments_to_one(spec.family(), d) ? im.ring.one() : im.ring.zero());
  im.description = spec.to_string() +
                   (ideal_level >= 0 ? " / ideal level " + std::to_string(ideal_level) : "");
  return a;
}

BasedAlgebra BasedAlgebra::diagram_algebra(const AlgebraSpec& spec) {
  return quotient(spec, -1);
}

BasedAlgebra BasedAlgebra::group_algebra(const GroupSpec& group, const RingSpec& ring,
                                         std::size_t max_order) {
  require(group.order() <= max_order, Errc::SizeTooLarge,
          "group order " + std::to_string(group.order()) + " exceeds the cap");
  BasedAlgebra a;
  a.impl_ = std::make_shared<Impl>();
  Impl& im = *a.impl_;
  im.kind = Impl::Kind::Group;
  im.ring = Ring(ring);
  im.group = group;
  switch (group.kind) {
    case GroupKind::Trivial:
      im.elements = {{0}};
      break;
    case GroupKind::Cyclic:
      for (int k = 0; k < group.n; ++k) im.elements.push_back({k});
      break;
    case GroupKind::Symmetric:
      im.elements = all_permutations(group.n);
      break;
    case GroupKind::ProductSymmetric:
      for (const auto& top : all_permutations(group.r)) {
        for (const auto& bottom : all_permutations(group.s)) {
          std::vector<int> image = top;
          for (int v : bottom) image.push_back(v + group.r);
          im.elements.push_back(image);
        }
      }
      std::sort(im.elements.begin(), im.elements.end());
      break;
  }
  for (std::size_t i = 0; i < im.elements.size(); ++i)
    im.element_index.emplace(im.elements[i], static_cast<int>(i));
  im.unit_row = {{0, im.ring.one()}};
  im.aug.assign(im.elements.size(), im.ring.one());
  im.description = "k[" + group.to_string() + "] over " + ring.to_string();
  return a;
}

int BasedAlgebra::dim() const {
  const Impl& im = *impl_;
  return static_cast<int>(im.kind == Impl::Kind::Group ? im.elements.size() : im.basis.size());
}

const Ring& BasedAlgebra::ring() const { return impl_->ring; }

const BasedAlgebra::Row& BasedAlgebra::unit() const { return impl_->unit_row; }

const BasedAlgebra::Row& BasedAlgebra::product(int i, int j) const {
  const Impl& im = *impl_;
  require(i >= 0 && i < dim() && j >= 0 && j < dim(), Errc::BadArgument,
          "basis index out of range");
  const auto key = std::make_pair(i, j);
  auto it = im.cache.find(key);
  if (it == im.cache.end()) it = im.cache.emplace(key, im.compute(i, j)).first;
  return it->second;
}

const Scalar& BasedAlgebra::augment(int i) const {
  require(i >= 0 && i < dim(), Errc::BadArgument, "basis index out of range");
  return impl_->aug[static_cast<std::size_t>(i)];
}

std::string BasedAlgebra::label(int i) const {
  const Impl& im = *impl_;
  require(i >= 0 && i < dim(), Errc::BadArgument, "basis index out of range");
  if (im.kind == Impl::Kind::Diagrams) return im.basis[static_cast<std::size_t>(i)].to_string();
  if (im.group.kind == GroupKind::Cyclic) {
    const int k = im.elements[static_cast<std::size_t>(i)][0];
    return k == 0 ? "e" : "t^" + std::to_string(k);
  }
  if (im.group.kind == GroupKind::Trivial) return "e";
  std::ostringstream os;
  os << "[";
  const auto& image = im.elements[static_cast<std::size_t>(i)];
  for (std::size_t v = 0; v < image.size(); ++v) os << (v ? " " : "") << image[v];
  os << "]";
  return os.str();
}

std::string BasedAlgebra::describe() const { return impl_->description; }

const std::vector<Diagram>* BasedAlgebra::diagram_basis() const {
  return impl_->kind == Impl::Kind::Diagrams ? &impl_->basis : nullptr;
}

int BasedAlgebra::index_of(const Diagram& d) const {
  const Impl& im = *impl_;
  if (im.kind != Impl::Kind::Diagrams) return -1;
  const auto it = im.index.find(d.canonical_key());
  return it == im.index.end() ? -1 : it->second;
}

}  // namespace diaghom
