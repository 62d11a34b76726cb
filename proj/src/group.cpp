#include "fone/group.hpp"

#include <sstream>

namespace fone {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonInjective: return "NonInjective";
    case Errc::BadDomain: return "BadDomain";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotMono: return "NotMono";
    case Errc::NotEpi: return "NotEpi";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::IncompleteTable: return "IncompleteTable";
    case Errc::CyclicQuiver: return "CyclicQuiver";
    case Errc::RelationInconsistent: return "RelationInconsistent";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotInverse: return "NotInverse";
    case Errc::NotFunctorial: return "NotFunctorial";
    case Errc::BadIdentity: return "BadIdentity";
    case Errc::NotInductiveHere: return "NotInductiveHere";
    case Errc::NotLeftInductive: return "NotLeftInductive";
    case Errc::DimTooLarge: return "DimTooLarge";
    case Errc::BaseNotSimple: return "BaseNotSimple";
    case Errc::NotNormal: return "NotNormal";
    case Errc::FreenessViolated: return "FreenessViolated";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::AxiomViolated: return "AxiomViolated";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

PointedGroup::PointedGroup(std::vector<uint32_t> orders)
    : orders_(std::move(orders)) {
  order_ = 1;
  for (uint32_t m : orders_) {
    if (m < 1) fail(Errc::BadInput, "cyclic order must be >= 1");
    order_ *= m;
  }
}

bool PointedGroup::is_one(const GroupElement& g) const {
  for (uint32_t r : g)
    if (r != 0) return false;
  return true;
}

GroupElement PointedGroup::mul(const GroupElement& a,
                               const GroupElement& b) const {
  GroupElement out(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i)
    out[i] = (a[i] + b[i]) % orders_[i];
  return out;
}

GroupElement PointedGroup::inv(const GroupElement& a) const {
  GroupElement out(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i)
    out[i] = (orders_[i] - a[i]) % orders_[i];
  return out;
}

GroupElement PointedGroup::pow(const GroupElement& a, uint64_t k) const {
  GroupElement out(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i)
    out[i] = static_cast<uint32_t>((static_cast<uint64_t>(a[i]) * k) % orders_[i]);
  return out;
}

uint64_t PointedGroup::index_of(const GroupElement& g) const {
  uint64_t idx = 0;
  for (size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + g[i];
  return idx;
}

GroupElement PointedGroup::element_at(uint64_t index) const {
  GroupElement g(orders_.size());
  for (size_t i = orders_.size(); i-- > 0;) {
    g[i] = static_cast<uint32_t>(index % orders_[i]);
    index /= orders_[i];
  }
  return g;
}

std::vector<GroupElement> PointedGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (uint64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

bool PointedGroup::valid_element(const GroupElement& g) const {
  if (g.size() != orders_.size()) return false;
  for (size_t i = 0; i < orders_.size(); ++i)
    if (g[i] >= orders_[i]) return false;
  return true;
}

void PointedGroup::check_element(const GroupElement& g) const {
  if (!valid_element(g)) fail(Errc::BadInput, "residue vector out of range");
}

std::string PointedGroup::show(const GroupElement& g) const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) os << ',';
    os << g[i];
  }
  os << ')';
  return os.str();
}

}  // namespace fone
