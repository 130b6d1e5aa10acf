#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qhc {

struct Bideg {
    int m = 0, n = 0;
    friend Bideg operator+(Bideg a, Bideg b) { return {a.m + b.m, a.n + b.n}; }
    friend Bideg operator-(Bideg a, Bideg b) { return {a.m - b.m, a.n - b.n}; }
    Bideg operator-() const { return {-m, -n}; }
    friend Bideg operator*(int k, Bideg a) { return {k * a.m, k * a.n}; }
    friend bool operator==(Bideg a, Bideg b) = default;
    friend auto operator<=>(Bideg a, Bideg b) = default;
};

// <kappa, d> for a commutation exponent table kappa.
inline int pair(Bideg kappa, Bideg d) { return kappa.m * d.m + kappa.n * d.n; }

using Letter = char8_t;
using Word = std::u8string;

struct GenSym {
    std::string name;
    int inverse_of = -1;  // letter id of the formal inverse, if any
    Bideg deg;
};

struct AlgebraMismatch : std::invalid_argument {
    AlgebraMismatch(const std::string& a, const std::string& b)
        : std::invalid_argument("elements of different algebras (" + a + ", " + b + ")") {}
};

// Generator table of one algebra. Letter ids follow the PBW precedence, so
// comparing words letter by letter compares precedence.
class Alphabet {
public:
    struct Entry {
        std::string name;
        Bideg deg;
        std::string inverse_name;  // empty when the generator has no inverse
    };

    Alphabet(std::string id, const std::vector<Entry>& entries);

    const std::string& id() const { return id_; }
    size_t size() const { return gens_.size(); }
    const GenSym& gen(Letter l) const { return gens_.at(l); }
    const std::string& name(Letter l) const { return gens_.at(l).name; }
    std::optional<Letter> find(const std::string& name) const;
    Letter at(const std::string& name) const;
    std::optional<Letter> inverse(Letter l) const {
        int i = gens_.at(l).inverse_of;
        return i < 0 ? std::nullopt : std::optional<Letter>(Letter(i));
    }

    Bideg degree(const Word& w) const;
    Word word(const std::vector<std::string>& names) const;
    std::string str(const Word& w) const;

private:
    std::string id_;
    std::vector<GenSym> gens_;
    std::unordered_map<std::string, Letter> index_;
};

using AlphaPtr = std::shared_ptr<const Alphabet>;

}  // namespace qhc
