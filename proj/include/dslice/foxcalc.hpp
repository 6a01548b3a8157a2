#pragma once

// Free-group words, finite presentations and abelianized Fox derivatives.

#include "laurent.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dslice {

struct Letter {
    std::string generator;
    int sign = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in a free group.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(const std::vector<Letter>& letters) {
        for (const auto& l : letters) push(l);
    }

    static GroupWord generator(const std::string& name, int sign = 1) {
        return GroupWord({Letter{name, sign}});
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    friend bool operator==(const GroupWord&, const GroupWord&) = default;

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
        GroupWord r = a;
        for (const auto& l : b.letters_) r.push(l);
        return r;
    }

    GroupWord inverse() const {
        GroupWord r;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back({it->generator, -it->sign});
        return r;
    }

    GroupWord pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        GroupWord r;
        for (long i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    std::set<std::string> generators_used() const {
        std::set<std::string> out;
        for (const auto& l : letters_) out.insert(l.generator);
        return out;
    }

private:
    void push(const Letter& l) {
        if (l.sign != 1 && l.sign != -1) throw Error("letter exponent must be +-1");
        if (!letters_.empty() && letters_.back().generator == l.generator && letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

inline std::string to_string(const GroupWord& w) {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += l.generator;
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

namespace detail {

class WordParser {
public:
    WordParser(std::string_view text, const std::set<std::string>* names) : s_(text), names_(names) {}

    GroupWord parse() {
        GroupWord w = sequence();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return w;
    }

private:
    GroupWord sequence() {
        GroupWord w;
        for (;;) {
            skip();
            if (pos_ == s_.size() || peek() == ')') return w;
            w = w * item();
        }
    }

    GroupWord item() {
        GroupWord atom;
        if (peek() == '(') {
            ++pos_;
            atom = sequence();
            skip();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else if (peek() == '1' && !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
        } else {
            atom = GroupWord::generator(name());
        }
        return atom.pow(exponent());
    }

    std::string name() {
        if (names_) {
            // Longest declared name that matches here.
            std::string best;
            for (const auto& n : *names_)
                if (n.size() > best.size() && s_.substr(pos_, n.size()) == n) best = n;
            if (best.empty()) fail("unknown generator");
            pos_ += best.size();
            return best;
        }
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') fail("expected a generator");
        std::string n(1, s_[pos_++]);
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n += s_[pos_++];
        return n;
    }

    long exponent() {
        static constexpr std::string_view kSuperMinusOne = "⁻¹";
        if (s_.substr(pos_, kSuperMinusOne.size()) == kSuperMinusOne) {
            pos_ += kSuperMinusOne.size();
            return -1;
        }
        if (peek() == '^') {
            ++pos_;
            bool paren = peek() == '(';
            if (paren) ++pos_;
            long sign = 1;
            if (peek() == '-' || peek() == '+') sign = s_[pos_++] == '-' ? -1 : 1;
            long e = digits();
            if (paren) {
                if (peek() != ')') fail("expected ')'");
                ++pos_;
            }
            return sign * e;
        }
        // ASCII shorthand `b-1`.
        if (peek() == '-' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            return -digits();
        }
        return 1;
    }

    long digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        if (d.empty()) fail("expected an exponent");
        return std::stol(d);
    }

    void skip() {
        while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*')) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("word parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                    std::string(s_) + "'");
    }

    std::string_view s_;
    const std::set<std::string>* names_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `a b^-1 (a d^-1)^3`, `ab^-1a`, `a b-1` or `ab⁻¹`. With `generators`,
/// names are matched against the declared set (longest match first).
inline GroupWord parse_word(std::string_view text, const std::set<std::string>* generators = nullptr) {
    return detail::WordParser(text, generators).parse();
}

/// Images of generators under abelianization; each image is a monomial with coefficient 1.
class AbelianizationMap {
public:
    AbelianizationMap() = default;
    AbelianizationMap(std::initializer_list<std::pair<const std::string, LaurentPolynomial>> images) {
        for (const auto& [g, img] : images) set(g, img);
    }

    void set(const std::string& generator, const LaurentPolynomial& image) {
        if (image.term_count() != 1 || image.terms().begin()->second != 1)
            throw Error("abelianization image of " + generator + " must be a monomial with coefficient 1, got " +
                        to_string(image));
        images_[generator] = image;
    }

    bool contains(const std::string& generator) const { return images_.count(generator) != 0; }

    const LaurentPolynomial& image(const std::string& generator) const {
        auto it = images_.find(generator);
        if (it == images_.end()) throw Error("unknown generator '" + generator + "'");
        return it->second;
    }

    const std::map<std::string, LaurentPolynomial>& images() const { return images_; }

    friend bool operator==(const AbelianizationMap&, const AbelianizationMap&) = default;

private:
    std::map<std::string, LaurentPolynomial> images_;
};

inline LaurentPolynomial abelianize(const GroupWord& w, const AbelianizationMap& m) {
    LaurentPolynomial acc(1);
    for (const auto& l : w.letters()) {
        const auto& img = m.image(l.generator);
        acc *= l.sign > 0 ? img : img.unit_inverse();
    }
    return acc;
}

/// Left Fox derivative d_g(w), pushed through the abelianization map.
inline LaurentPolynomial fox_derivative(const GroupWord& w, const std::string& g, const AbelianizationMap& m) {
    m.image(g);  // throws for an unknown generator
    LaurentPolynomial prefix(1), acc;
    for (const auto& l : w.letters()) {
        const auto& img = m.image(l.generator);
        if (l.sign > 0) {
            if (l.generator == g) acc += prefix;
            prefix *= img;
        } else {
            prefix *= img.unit_inverse();
            if (l.generator == g) acc -= prefix;
        }
    }
    return acc;
}

/// A relator, either spelled out or opaque with a known set of generators it avoids.
struct Relator {
    std::string name;
    std::optional<GroupWord> word;
    std::set<std::string> omitted_generators;

    friend bool operator==(const Relator&, const Relator&) = default;
};

inline LaurentPolynomial fox_derivative(const Relator& r, const std::string& g, const AbelianizationMap& m) {
    if (r.word) return fox_derivative(*r.word, g, m);
    if (r.omitted_generators.count(g)) return {};
    throw Error("relator " + r.name + " is not spelled out and may involve " + g);
}

class Presentation {
public:
    Presentation(std::vector<std::string> generators, std::vector<Relator> relators, AbelianizationMap abelianization,
                 std::optional<GroupWord> longitude = std::nullopt,
                 std::optional<std::string> distinguished = std::nullopt)
        : generators_(std::move(generators)),
          relators_(std::move(relators)),
          abelianization_(std::move(abelianization)),
          longitude_(std::move(longitude)),
          distinguished_(std::move(distinguished)) {
        validate();
    }

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<Relator>& relators() const { return relators_; }
    const AbelianizationMap& abelianization() const { return abelianization_; }
    const std::optional<GroupWord>& longitude() const { return longitude_; }
    const std::optional<std::string>& distinguished_generator() const { return distinguished_; }

    std::set<std::string> generator_set() const { return {generators_.begin(), generators_.end()}; }

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    void validate() const {
        std::set<std::string> gens = generator_set();
        if (gens.size() != generators_.size()) throw Error("presentation: duplicate generator");
        for (const auto& g : generators_)
            if (!abelianization_.contains(g)) throw Error("presentation: generator " + g + " has no abelian image");
        auto check_word = [&](const GroupWord& w, const std::string& what) {
            for (const auto& used : w.generators_used())
                if (!gens.count(used)) throw Error("presentation: " + what + " uses undeclared generator " + used);
        };
        for (const auto& r : relators_) {
            for (const auto& g : r.omitted_generators)
                if (!gens.count(g)) throw Error("presentation: relator " + r.name + " omits undeclared " + g);
            if (!r.word) continue;
            check_word(*r.word, "relator " + r.name);
            if (abelianize(*r.word, abelianization_) != LaurentPolynomial(1))
                throw Error("presentation: relator " + r.name + " does not vanish under abelianization");
        }
        if (longitude_) check_word(*longitude_, "longitude");
        if (distinguished_ && !gens.count(*distinguished_))
            throw Error("presentation: distinguished generator " + *distinguished_ + " is not declared");
    }

    std::vector<std::string> generators_;
    std::vector<Relator> relators_;
    AbelianizationMap abelianization_;
    std::optional<GroupWord> longitude_;
    std::optional<std::string> distinguished_;
};

}  // namespace dslice
