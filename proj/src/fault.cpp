#include "invseq/fault.hpp"

#include <array>
#include <atomic>

namespace invseq::fault {

namespace {
std::atomic<Fault> g_active{Fault::None};

constexpr std::array kMutants{
    Fault::PsiLowerValue, Fault::PsiSkipLast,     Fault::PsiInvRaiseValue,
    Fault::MoveRightStop, Fault::MoveRightGain,   Fault::MoveLeftEqual,
    Fault::MoveLeftCrucial, Fault::BCodeLowPart,  Fault::BCodeHighPart,
    Fault::BCodeLabelShift,
};
}  // namespace

Fault active() noexcept { return g_active.load(std::memory_order_relaxed); }

bool is(Fault f) noexcept { return active() == f; }

std::span<const Fault> all_mutants() noexcept { return kMutants; }

std::string_view name(Fault f) noexcept {
  switch (f) {
    case Fault::None: return "none";
    case Fault::PsiLowerValue: return "psi-lower-value";
    case Fault::PsiSkipLast: return "psi-skip-last";
    case Fault::PsiInvRaiseValue: return "psi-inv-raise-value";
    case Fault::MoveRightStop: return "move-right-stop";
    case Fault::MoveRightGain: return "move-right-gain";
    case Fault::MoveLeftEqual: return "move-left-equal";
    case Fault::MoveLeftCrucial: return "move-left-crucial";
    case Fault::BCodeLowPart: return "bcode-low-part";
    case Fault::BCodeHighPart: return "bcode-high-part";
    case Fault::BCodeLabelShift: return "bcode-label-shift";
  }
  return "?";
}

Scoped::Scoped(Fault f) noexcept : previous_(g_active.exchange(f)) {}

Scoped::~Scoped() { g_active.store(previous_); }

}  // namespace invseq::fault
