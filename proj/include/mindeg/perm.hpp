#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mindeg {

using Pt = std::uint16_t;

/// A permutation of {0..degree-1}, stored as an image table.
///
/// Composition convention used throughout: (p * q)(i) = q(p(i)),
/// i.e. apply p first, then q.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Pt> images);
    static Permutation identity(std::size_t degree);

    /// Parse a single cycle string like "(1 2 3)(4 5)" (1-indexed) at the
    /// given degree, or an image table "[2,1,3]" (1-indexed images).
    static Permutation parse(const std::string& text, std::size_t degree);

    std::size_t degree() const { return images_.size(); }
    Pt operator()(Pt i) const { return images_[i]; }
    const std::vector<Pt>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    /// p * q: apply p first, then q.
    Permutation operator*(const Permutation& other) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    /// Disjoint-cycle notation, 1-indexed; "()" for the identity.
    std::string to_cycles() const;

private:
    std::vector<Pt> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);

/// Build a permutation from 1-indexed cycles, e.g. {{1,2,3},{4,5}}.
Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

struct PermHash {
    std::size_t operator()(const Permutation& p) const;
};

} // namespace mindeg
