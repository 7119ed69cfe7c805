#include "coxspin/vars.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace coxspin {

namespace {

struct InternTable {
    std::shared_mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, uint32_t> index;
};

InternTable& table() {
    static InternTable t;
    return t;
}

}  // namespace

Var Var::intern(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    auto& t = table();
    std::string key(name);
    {
        std::shared_lock lock(t.mu);
        auto it = t.index.find(key);
        if (it != t.index.end()) return Var(it->second);
    }
    std::unique_lock lock(t.mu);
    auto [it, inserted] = t.index.try_emplace(key, static_cast<uint32_t>(t.names.size()));
    if (inserted) t.names.push_back(key);
    return Var(it->second);
}

const std::string& Var::name() const {
    auto& t = table();
    std::shared_lock lock(t.mu);
    return t.names.at(id_);
}

Var xvar(int i) { return Var::intern("x" + std::to_string(i)); }
Var Xvar(int i) { return Var::intern("X" + std::to_string(i)); }
Var yvar(int i) { return Var::intern("y" + std::to_string(i)); }
Var Yvar(int i) { return Var::intern("Y" + std::to_string(i)); }
Var pvar(int i) { return Var::intern("p" + std::to_string(i)); }
Var Pvar(int i) { return Var::intern("P" + std::to_string(i)); }

Var zvar(int i, int j) {
    if (i > j) std::swap(i, j);
    return Var::intern("z_{" + std::to_string(i) + "," + std::to_string(j) + "}");
}

Var epsvar() { return Var::intern("eps"); }

}  // namespace coxspin
