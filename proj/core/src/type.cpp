#include "cttqe/type.hpp"

#include <vector>

namespace cttqe {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Type Type::iota() {
  static const auto node =
      std::make_shared<const Node>(Node{TypeKind::Iota, nullptr, nullptr, 0x11u});
  return Type(node);
}

Type Type::omicron() {
  static const auto node =
      std::make_shared<const Node>(Node{TypeKind::Omicron, nullptr, nullptr, 0x22u});
  return Type(node);
}

Type Type::epsilon() {
  static const auto node =
      std::make_shared<const Node>(Node{TypeKind::Epsilon, nullptr, nullptr, 0x33u});
  return Type(node);
}

Type Type::fun(Type domain, Type codomain) {
  std::size_t h = mix(mix(0x44u, domain.node_->hash), codomain.node_->hash);
  return Type(std::make_shared<const Node>(
      Node{TypeKind::Fun, std::move(domain.node_), std::move(codomain.node_), h}));
}

Type Type::fun_n(std::initializer_list<Type> domains, Type result) {
  Type out = std::move(result);
  std::vector<Type> ds(domains);
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) out = fun(*it, out);
  return out;
}

Type Type::domain() const { return Type(node_->dom); }

Type Type::codomain() const { return Type(node_->cod); }

bool Type::mentions_epsilon() const {
  switch (kind()) {
    case TypeKind::Epsilon: return true;
    case TypeKind::Fun:
      return Type(node_->dom).mentions_epsilon() || Type(node_->cod).mentions_epsilon();
    default: return false;
  }
}

bool Type::operator==(const Type& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->hash != other.node_->hash) return false;
  if (node_->kind != TypeKind::Fun) return true;
  return Type(node_->dom) == Type(other.node_->dom) && Type(node_->cod) == Type(other.node_->cod);
}

std::string Type::to_string() const {
  switch (kind()) {
    case TypeKind::Iota: return "i";
    case TypeKind::Omicron: return "o";
    case TypeKind::Epsilon: return "eps";
    case TypeKind::Fun: {
      const Type d = Type(node_->dom);
      std::string left = d.is_fun() ? "(" + d.to_string() + ")" : d.to_string();
      return left + "->" + Type(node_->cod).to_string();
    }
  }
  return "?";
}

}  // namespace cttqe
