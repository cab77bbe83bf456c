#include "tetralat/varpool.hpp"

#include <unordered_map>

#include "tetralat/error.hpp"

namespace tetralat {

namespace {
std::unordered_map<std::string, VarId>& index_map() {
  static std::unordered_map<std::string, VarId> m;
  return m;
}
}  // namespace

VarPool& VarPool::instance() {
  static VarPool pool;
  return pool;
}

VarId VarPool::intern(const std::string& name) {
  auto& idx = index_map();
  auto it = idx.find(name);
  if (it != idx.end()) return it->second;
  VarId id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  idx.emplace(name, id);
  return id;
}

const std::string& VarPool::name(VarId id) const {
  if (id >= names_.size()) fail(Errc::Internal, "unknown variable id");
  return names_[id];
}

VarId var(const std::string& name) { return VarPool::instance().intern(name); }

VarId var_indexed(const std::string& stem, int index) {
  return var(stem + std::to_string(index));
}

VarId var_grid(const std::string& stem, int k, int j) {
  return var(stem + std::to_string(k) + "_" + std::to_string(j));
}

const std::string& var_name(VarId id) { return VarPool::instance().name(id); }

}  // namespace tetralat
