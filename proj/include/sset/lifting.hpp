// Extension search against a fixed target, map enumeration and fibrancy reports.
#pragma once

#include <functional>

#include "sset/colimit.hpp"

namespace sset {

// All simplices of X by dimension, looked up by their face tuple.
class SimplexIndex {
  public:
    SimplexIndex(SP X, int maxdim);
    SP target() const { return X_; }
    int maxdim() const { return static_cast<int>(sims_.size()) - 1; }
    const std::vector<Formal>& all(int n) const { return sims_[n]; }
    // Indices into all(n) of simplices whose faces are exactly fs.
    const std::vector<int>& matching(int n, const std::vector<Formal>& fs) const;

  private:
    SP X_;
    std::vector<std::vector<Formal>> sims_;
    std::vector<std::map<std::vector<Formal>, std::vector<int>>> byFaces_;
    std::vector<int> none_;
};

using Assignment = std::vector<std::vector<std::optional<Formal>>>;

enum class LiftStatus { Lift, NoLift, Undecidable };

struct LiftResult {
    LiftStatus status = LiftStatus::NoLift;
    std::optional<SMap> map;
    bool bounded = false;  // the domain was itself a truncation
};

// Completes a partial assignment of B's cells into X. Calls `visit` on each
// solution until it returns false. Returns the number of solutions visited.
size_t solve_assignments(SP B, const SimplexIndex& idx, const Assignment& pre,
                         const std::function<bool(const SMap&)>& visit);

// Any assignment of a cell above a truncated target's bound is undecidable.
bool undecidable(const SSet& B, const Assignment& pre, const SSet& X);

LiftResult extend(const SMap& incl, const SMap& f, const SimplexIndex* idx = nullptr);

// Number of extensions of f along incl, stopping at cap.
size_t count_extensions(const SMap& incl, const SMap& f, size_t cap);

struct MapList {
    std::vector<SMap> maps;
    bool cap_exceeded = false;
    bool undecidable = false;
};
MapList enumerate_maps(SP A, SP X, size_t cap = 1000000, const SimplexIndex* idx = nullptr);

struct NamedInclusion {
    std::string name;
    SMap incl;
    bool outer = false;
};

enum class Verdict { Pass, Fail, Undecidable, CapExceeded };
std::string verdict_name(Verdict v);

struct FibrancyEntry {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::optional<SMap> counterexample;  // A -> X with no extension
    size_t maps_checked = 0;
    bool bounded = false;
};

struct FibrancyReport {
    std::string object, family, bounds;
    std::vector<FibrancyEntry> entries;

    Verdict overall() const;
};

struct RlpOptions {
    size_t cap = 200000;
};

// OpenMP over independent lift problems; merged in canonical problem order.
FibrancyReport has_rlp(SP X, const std::vector<NamedInclusion>& family, const RlpOptions& opt = {});
// Serial reference with identical semantics.
FibrancyReport has_rlp_serial(SP X, const std::vector<NamedInclusion>& family, const RlpOptions& opt = {});

// Homotopy I(.)A -> X from f to g through the cylinder.
std::optional<SMap> homotopy_step(const Cylinder& cyl, const SMap& f, const SMap& g);
bool homotopic_bounded(const Cylinder& cyl, const SMap& f, const SMap& g, int bound, size_t cap = 100000);

struct Retract {
    SMap inner, outer;  // A -> B and A' -> B'
    SMap sA, sB;        // A -> A', B -> B'
    SMap rA, rB;        // A' -> A, B' -> B
};
std::vector<std::string> verify_retract(const Retract& r);

}  // namespace sset
