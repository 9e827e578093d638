#pragma once

#include <span>
#include <string_view>

// Deliberate off-by-one mutants of the core algorithms. Only the mutation
// tests switch these on; with Fault::None (the default) the library behaves
// normally.
namespace invseq::fault {

enum class Fault {
  None,
  PsiLowerValue,      // psi lowers the second 1 to (value of the 0) + 1
  PsiSkipLast,        // psi scan stops one position early
  PsiInvRaiseValue,   // psi_inv raises to (maximal 1) - 1
  MoveRightStop,      // rightward mover also stops before an equal element
  MoveRightGain,      // rightward mover gains 2 on its first pass
  MoveLeftEqual,      // leftward mover stops when the next element is value - 1
  MoveLeftCrucial,    // crucial stop compares against the pre-pass value
  BCodeLowPart,       // J = [min, pi_i] instead of [min, pi_i - 1]
  BCodeHighPart,      // H = [pi_i, max] instead of [pi_i + 1, max]
  BCodeLabelShift,    // appended label is l_k instead of l_k + 1
};

Fault active() noexcept;
bool is(Fault f) noexcept;

std::span<const Fault> all_mutants() noexcept;
std::string_view name(Fault f) noexcept;

class Scoped {
 public:
  explicit Scoped(Fault f) noexcept;
  ~Scoped();
  Scoped(const Scoped&) = delete;
  Scoped& operator=(const Scoped&) = delete;

 private:
  Fault previous_;
};

}  // namespace invseq::fault
