#include "pepsi/counters.hpp"

namespace pepsi::counters {

namespace {
thread_local Scope* g_top = nullptr;
}

Scope::Scope(std::string label) : label_(std::move(label)), parent_(g_top) {
    g_top = this;
}

Scope::~Scope() {
    g_top = parent_;
    if (parent_) parent_->children_.emplace_back(label_, counts_);
}

void add_exps(uint64_t n) {
    if (g_top) g_top->counts_.exps += n;
}
void add_mults(uint64_t n) {
    if (g_top) g_top->counts_.mults += n;
}
void add_pairings(uint64_t n) {
    if (g_top) g_top->counts_.pairings += n;
}
void add_hashes(uint64_t n) {
    if (g_top) g_top->counts_.hashes += n;
}

}  // namespace pepsi::counters
