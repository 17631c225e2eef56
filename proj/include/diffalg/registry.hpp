#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diffalg/error.hpp"

namespace diffalg {

enum class Field { Q, Qi };

inline const char* field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

/// Ordered list of ring variables plus the coefficient field. Frozen once
/// built; every polynomial of a ring holds a pointer to the same registry,
/// and rings are compared by pointer identity.
class VarRegistry {
public:
    VarRegistry(std::vector<std::string> names, Field field)
        : names_(std::move(names)), field_(field) {
        for (std::size_t a = 0; a < names_.size(); ++a) {
            if (names_[a].empty())
                fail(Errc::VariableNameReserved, "empty variable name");
            if (field_ == Field::Qi && names_[a] == "i")
                fail(Errc::VariableNameReserved,
                     "'i' denotes the imaginary unit in Q(i) rings");
            for (std::size_t b = a + 1; b < names_.size(); ++b)
                if (names_[a] == names_[b])
                    fail(Errc::VariableNameReserved, "duplicate variable '" + names_[a] + "'");
        }
    }

    std::size_t size() const { return names_.size(); }
    Field field() const { return field_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t idx) const { return names_[idx]; }

    std::optional<std::size_t> find(const std::string& name) const {
        for (std::size_t k = 0; k < names_.size(); ++k)
            if (names_[k] == name) return k;
        return std::nullopt;
    }

    std::size_t index_of(const std::string& name) const {
        auto k = find(name);
        if (!k) fail(Errc::UnknownVariable, "variable '" + name + "' not in ring");
        return *k;
    }

private:
    std::vector<std::string> names_;
    Field field_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

inline RegistryPtr make_registry(std::vector<std::string> names, Field field) {
    return std::make_shared<const VarRegistry>(std::move(names), field);
}

}  // namespace diffalg
