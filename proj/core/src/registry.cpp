#include "chowpoly/registry.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chowpoly/parser.hpp"

namespace chowpoly {

using nlohmann::json;

void Registry::add(RegistryEntry e) {
    for (auto& old : entries_)
        if (old.name == e.name) {
            old = std::move(e);
            return;
        }
    entries_.push_back(std::move(e));
}

const RegistryEntry* Registry::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

std::optional<Evidence> evidence_from_name(const std::string& name) {
    if (name == "proved") return Evidence::Proved;
    if (name == "certified") return Evidence::Certified;
    if (name == "numeric") return Evidence::Numeric;
    return std::nullopt;
}

std::string Registry::to_json() const {
    json arr = json::array();
    for (const auto& e : entries_) {
        json terms = json::array();
        for (const auto& [p, c] : e.symbol.terms())
            terms.push_back({{"coeff", rat_to_string(c)}, {"point", p.to_string()}});
        arr.push_back({{"name", e.name},
                       {"weight", e.symbol.weight()},
                       {"terms", terms},
                       {"evidence", evidence_name(e.evidence)}});
    }
    return arr.dump(2);
}

Registry Registry::from_json(const std::string& text) {
    json arr = json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("registry must be a JSON array");
    Registry r;
    for (const auto& item : arr) {
        RegistryEntry e;
        e.name = item.at("name").get<std::string>();
        LiSymbol s(item.at("weight").get<int>());
        for (const auto& term : item.at("terms")) {
            Rat c = rat_from_string(term.at("coeff").get<std::string>());
            s.add(c, parse_ppoint(term.at("point").get<std::string>()));
        }
        e.symbol = std::move(s);
        auto ev = evidence_from_name(item.at("evidence").get<std::string>());
        if (!ev) throw std::runtime_error("unknown evidence tag in registry");
        e.evidence = *ev;
        r.add(std::move(e));
    }
    return r;
}

Registry Registry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return Registry{};
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void Registry::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write registry file: " + path);
    out << to_json() << "\n";
}

}  // namespace chowpoly
