#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pepsi::counters {

/// Operation tallies for one protocol step. Conventions:
///  - exps: invocations of a group/modular exponentiation primitive; a fused
///    multi-power sharing one fresh exponent counts once.
///  - mults: group-element or modular multiplications issued by protocol
///    code; a division counts as one mult (the inverse is not counted).
///  - pairings: bilinear map evaluations (a product of k pairings counts k).
///  - hashes: protocol-level hash evaluations (H1/H2/H3/H'); the internals
///    of hash-to-group are part of the single hash event.
struct Counts {
    uint64_t exps = 0;
    uint64_t mults = 0;
    uint64_t pairings = 0;
    uint64_t hashes = 0;

    bool operator==(const Counts&) const = default;
};

/// RAII counting frame. Increments land in the innermost open scope only;
/// when a nested scope closes, its totals are attached to the parent as a
/// named child instead of being merged, so verification sub-steps can be
/// reported separately from the main flow.
class Scope {
public:
    explicit Scope(std::string label);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

    const Counts& counts() const { return counts_; }
    const std::string& label() const { return label_; }
    const std::vector<std::pair<std::string, Counts>>& children() const { return children_; }

private:
    friend void add_exps(uint64_t);
    friend void add_mults(uint64_t);
    friend void add_pairings(uint64_t);
    friend void add_hashes(uint64_t);

    std::string label_;
    Counts counts_;
    std::vector<std::pair<std::string, Counts>> children_;
    Scope* parent_ = nullptr;
};

void add_exps(uint64_t n = 1);
void add_mults(uint64_t n = 1);
void add_pairings(uint64_t n = 1);
void add_hashes(uint64_t n = 1);

}  // namespace pepsi::counters
