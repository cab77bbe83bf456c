#ifndef TETRALAT_VARPOOL_HPP
#define TETRALAT_VARPOOL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tetralat {

/// Identifier of a symbolic variable in the process-global registry.
/// Registration order gives the stable total order used by term ordering,
/// so two polynomials built in the same process always compare the same way.
using VarId = std::uint32_t;

class VarPool {
public:
  static VarPool& instance();

  VarId intern(const std::string& name);
  const std::string& name(VarId id) const;
  std::size_t size() const { return names_.size(); }

private:
  VarPool() = default;
  std::vector<std::string> names_;
};

/// Interns `name` and returns its id.
VarId var(const std::string& name);

/// Convenience for the ubiquitous indexed families: var_indexed("z", 3) -> z3.
VarId var_indexed(const std::string& stem, int index);

/// Grid variable z_k^{(j)} spelled as e.g. "z3_2" (k=3, superscript j=2).
VarId var_grid(const std::string& stem, int k, int j);

const std::string& var_name(VarId id);

}  // namespace tetralat

#endif
