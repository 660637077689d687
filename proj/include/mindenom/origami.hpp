#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mindenom {

/// Permutation of {0, ..., d-1}; text forms use 1-based cycle notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t d);
    /// Cycle notation such as "(1 2)(3)"; omitted points are fixed.
    static Permutation parse_cycles(const std::string& text, std::size_t degree);

    std::size_t size() const { return images_.size(); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation power(long k) const;
    std::vector<std::vector<int>> cycles() const;
    std::string format_cycles() const;

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

enum class Generator {
    TUpper,  // [[1, 1], [0, 1]]
    TLower,  // [[1, 0], [-1, 1]], the horocycle element h_1
    S        // [[0, -1], [1, 0]], rotation by a quarter turn
};

/// Square-tiled surface: square i has right neighbour h(i) and upper neighbour v(i).
class Origami {
public:
    Origami(Permutation h, Permutation v);

    static Origami torus() { return Origami(Permutation::identity(1), Permutation::identity(1)); }
    /// Two lines "h=(...)" and "v=(...)" in 1-based cycle notation.
    static Origami parse(const std::string& text);
    std::string format() const;

    std::size_t degree() const { return h_.size(); }
    const Permutation& h() const { return h_; }
    const Permutation& v() const { return v_; }

    /// Maps the square whose lower-left corner is a vertex to the next square around that
    /// vertex, one full turn later; its cycles are the vertices of the surface.
    Permutation vertex_permutation() const;
    /// Vertex cycles with cone angle above 2 pi; for the torus every vertex is marked.
    std::vector<std::vector<int>> cone_points() const;
    /// Marked-vertex id of each square's lower-left corner, or -1 when unmarked.
    std::vector<int> corner_labels() const;

    friend bool operator==(const Origami&, const Origami&) = default;

private:
    Permutation h_, v_;
};

Origami act(Generator g, const Origami& o);
Origami act_inverse(Generator g, const Origami& o);
/// Action of T_lower^k, that is of h_k = [[1, 0], [-k, 1]].
Origami act_lower_power(const Origami& o, long k);

/// Relabelling phi with phi h phi^-1 = h' and phi v phi^-1 = v', if any.
std::optional<Permutation> find_isomorphism(const Origami& a, const Origami& b);
bool isomorphic(const Origami& a, const Origami& b);

/// True iff h_alpha maps the origami to an isomorphic one.
bool veech_h_alpha_check(const Origami& o, long alpha);
/// Smallest alpha >= 1 passing veech_h_alpha_check; throws past max_alpha.
long minimal_alpha(const Origami& o, long max_alpha = 100000);

} // namespace mindenom
