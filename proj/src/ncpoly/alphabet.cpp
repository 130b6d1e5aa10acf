#include "qhc/ncpoly/alphabet.hpp"

namespace qhc {

Alphabet::Alphabet(std::string id, const std::vector<Entry>& entries) : id_(std::move(id)) {
    if (entries.size() > 250) throw std::invalid_argument("alphabet too large");
    for (auto& e : entries) {
        if (index_.count(e.name)) throw std::invalid_argument("duplicate generator " + e.name);
        index_[e.name] = Letter(gens_.size());
        gens_.push_back({e.name, -1, e.deg});
    }
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].inverse_name.empty()) continue;
        Letter j = at(entries[i].inverse_name);
        if (!(gens_[j].deg == -gens_[i].deg))
            throw std::invalid_argument("inverse of " + entries[i].name + " must have opposite degree");
        gens_[i].inverse_of = j;
        gens_[j].inverse_of = int(i);
    }
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Letter Alphabet::at(const std::string& name) const {
    auto l = find(name);
    if (!l) throw std::invalid_argument("unknown generator " + name + " in " + id_);
    return *l;
}

Bideg Alphabet::degree(const Word& w) const {
    Bideg d;
    for (Letter l : w) d = d + gens_.at(l).deg;
    return d;
}

Word Alphabet::word(const std::vector<std::string>& names) const {
    Word w;
    for (auto& n : names) w.push_back(at(n));
    return w;
}

std::string Alphabet::str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += '*';
        s += gens_.at(w[i]).name;
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

}  // namespace qhc
