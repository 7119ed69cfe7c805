#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace coxspin {

/// A polynomial variable: an interned name. Copies are cheap; identity is
/// the index in the process-wide intern table, so two Vars with the same
/// name are equal. Interning is thread-safe.
class Var {
  public:
    static Var intern(std::string_view name);

    uint32_t id() const { return id_; }
    const std::string& name() const;

    friend auto operator<=>(const Var& a, const Var& b) { return a.id_ <=> b.id_; }
    friend bool operator==(const Var& a, const Var& b) { return a.id_ == b.id_; }

  private:
    explicit Var(uint32_t id) : id_(id) {}
    uint32_t id_;
};

// The indexed variable families used throughout. Indices are 1-based.
Var xvar(int i);   // "x1", "x2", ...
Var Xvar(int i);   // "X1", ...
Var yvar(int i);
Var Yvar(int i);
Var pvar(int i);
Var Pvar(int i);
Var zvar(int i, int j);  // "z_{i,j}", i < j
Var epsvar();            // "eps"

}  // namespace coxspin
