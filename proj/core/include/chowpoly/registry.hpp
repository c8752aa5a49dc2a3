#pragma once

// Persistent store of named functional-equation generators with their
// evidence levels, serialized as a JSON array of
//   {name, weight, terms: [{coeff, point}], evidence}.

#include <optional>
#include <string>
#include <vector>

#include "chowpoly/lisymbol.hpp"

namespace chowpoly {

struct RegistryEntry {
    std::string name;
    LiSymbol symbol;
    Evidence evidence = Evidence::Proved;
};

class Registry {
public:
    const std::vector<RegistryEntry>& entries() const { return entries_; }

    // replaces an existing entry with the same name
    void add(RegistryEntry e);
    const RegistryEntry* find(const std::string& name) const;

    std::string to_json() const;
    static Registry from_json(const std::string& text);

    static Registry load(const std::string& path);  // missing file -> empty
    void save(const std::string& path) const;

private:
    std::vector<RegistryEntry> entries_;
};

std::optional<Evidence> evidence_from_name(const std::string& name);

}  // namespace chowpoly
