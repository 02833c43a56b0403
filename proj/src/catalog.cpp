#include "qan/catalog.hpp"

#include "qan/errors.hpp"

namespace qan {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Exact: return "exact";
        case Mode::RationalQ: return "rational";
        case Mode::Numeric: return "numeric";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "exact") return Mode::Exact;
    if (s == "rational") return Mode::RationalQ;
    if (s == "numeric") return Mode::Numeric;
    throw ConfigError("unknown mode: " + s + " (expected exact|rational|numeric)");
}

const EntryDef* Registry::find(const std::string& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<const EntryDef*> Registry::all() const {
    std::vector<const EntryDef*> out;
    for (const auto& [id, def] : entries_) out.push_back(&def);
    return out;
}

void Registry::insert(EntryDef def) {
    if (entries_.count(def.id)) throw ConfigError("duplicate catalog id: " + def.id);
    entries_.emplace(def.id, std::move(def));
}

void register_entries_master(Registry&);
void register_entries_products(Registry&);
void register_entries_eisenstein(Registry&);
void register_entries_rogers(Registry&);
void register_entries_lemmas(Registry&);

const Registry& catalog() {
    static const Registry reg = [] {
        Registry r;
        register_entries_master(r);
        register_entries_products(r);
        register_entries_eisenstein(r);
        register_entries_rogers(r);
        register_entries_lemmas(r);
        return r;
    }();
    return reg;
}

} // namespace qan
