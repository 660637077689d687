#include "mindenom/origami.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace mindenom {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(std::size_t d) {
    std::vector<int> p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<int>(i);
    return Permutation(std::move(p));
}

Permutation Permutation::parse_cycles(const std::string& text, std::size_t degree) {
    std::vector<int> p(degree, -1);
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '(' in \"" + text + "\"");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t end = pos;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            if (end == pos) throw std::invalid_argument("cycle notation: expected a label in \"" + text + "\"");
            const long label = std::stol(text.substr(pos, end - pos));
            if (label < 1 || static_cast<std::size_t>(label) > degree)
                throw std::invalid_argument("cycle notation: label out of range");
            const int x = static_cast<int>(label - 1);
            if (used[static_cast<std::size_t>(x)]) throw std::invalid_argument("cycle notation: repeated label");
            used[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
            pos = end;
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            p[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    for (std::size_t i = 0; i < degree; ++i)
        if (p[i] < 0) p[i] = static_cast<int>(i);
    return Permutation(std::move(p));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Permutation Permutation::power(long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Permutation out = identity(size());
    while (e) {
        if (e & 1) out = base * out;
        base = base * base;
        e >>= 1;
    }
    return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int x = static_cast<int>(i); !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string Permutation::format_cycles() const {
    std::ostringstream os;
    for (const auto& c : cycles()) {
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k] + 1;
        os << ')';
    }
    return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
    std::vector<int> p(a.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = a(b(static_cast<int>(i)));
    return Permutation(std::move(p));
}

Origami::Origami(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
    if (h_.size() != v_.size() || h_.size() == 0) throw std::invalid_argument("origami permutations must share a positive degree");
    std::vector<bool> seen(degree(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : {h_(x), v_(x)}) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                ++reached;
                queue.push_back(y);
            }
        }
    }
    if (reached != degree()) throw std::invalid_argument("origami is not connected");
}

Origami Origami::parse(const std::string& text) {
    std::string hs, vs;
    bool have_h = false, have_v = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        if (line.rfind("h=", 0) == 0 && !have_h) {
            hs = line.substr(2);
            have_h = true;
        } else if (line.rfind("v=", 0) == 0 && !have_v) {
            vs = line.substr(2);
            have_v = true;
        } else {
            throw std::invalid_argument("origami text: unexpected line \"" + line + "\"");
        }
    }
    if (!have_h || !have_v) throw std::invalid_argument("origami text needs an h= line and a v= line");
    std::size_t degree = 0;
    for (const std::string* s : {&hs, &vs}) {
        std::size_t pos = 0;
        while (pos < s->size()) {
            if (std::isdigit(static_cast<unsigned char>((*s)[pos]))) {
                std::size_t end = pos;
                while (end < s->size() && std::isdigit(static_cast<unsigned char>((*s)[end]))) ++end;
                degree = std::max<std::size_t>(degree, std::stoul(s->substr(pos, end - pos)));
                pos = end;
            } else {
                ++pos;
            }
        }
    }
    if (degree == 0) throw std::invalid_argument("origami text has no squares");
    return Origami(Permutation::parse_cycles(hs, degree), Permutation::parse_cycles(vs, degree));
}

std::string Origami::format() const { return "h=" + h_.format_cycles() + "\nv=" + v_.format_cycles() + "\n"; }

Permutation Origami::vertex_permutation() const { return v_ * h_ * v_.inverse() * h_.inverse(); }

std::vector<std::vector<int>> Origami::cone_points() const {
    auto cycles = vertex_permutation().cycles();
    std::vector<std::vector<int>> cones;
    for (auto& c : cycles)
        if (c.size() > 1) cones.push_back(c);
    return cones.empty() ? cycles : cones;
}

std::vector<int> Origami::corner_labels() const {
    std::vector<int> label(degree(), -1);
    const auto cones = cone_points();
    for (std::size_t k = 0; k < cones.size(); ++k)
        for (int s : cones[k]) label[static_cast<std::size_t>(s)] = static_cast<int>(k);
    return label;
}

Origami act(Generator g, const Origami& o) {
    switch (g) {
    case Generator::TUpper:
        return Origami(o.h(), o.v() * o.h().inverse());
    case Generator::TLower:
        return Origami(o.h() * o.v(), o.v());
    case Generator::S:
        return Origami(o.v().inverse(), o.h());
    }
    throw std::logic_error("unknown generator");
}

Origami act_inverse(Generator g, const Origami& o) {
    switch (g) {
    case Generator::TUpper:
        return Origami(o.h(), o.v() * o.h());
    case Generator::TLower:
        return Origami(o.h() * o.v().inverse(), o.v());
    case Generator::S:
        return Origami(o.v(), o.h().inverse());
    }
    throw std::logic_error("unknown generator");
}

Origami act_lower_power(const Origami& o, long k) { return Origami(o.h() * o.v().power(k), o.v()); }

std::optional<Permutation> find_isomorphism(const Origami& a, const Origami& b) {
    const std::size_t d = a.degree();
    if (b.degree() != d) return std::nullopt;
    for (std::size_t target = 0; target < d; ++target) {
        std::vector<int> phi(d, -1);
        phi[0] = static_cast<int>(target);
        std::deque<int> queue{0};
        bool ok = true;
        while (ok && !queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            const int fx = phi[static_cast<std::size_t>(x)];
            const std::pair<int, int> steps[2] = {{a.h()(x), b.h()(fx)}, {a.v()(x), b.v()(fx)}};
            for (auto [y, fy] : steps) {
                int& slot = phi[static_cast<std::size_t>(y)];
                if (slot < 0) {
                    slot = fy;
                    queue.push_back(y);
                } else if (slot != fy) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<bool> hit(d, false);
        for (int y : phi) {
            if (y < 0 || hit[static_cast<std::size_t>(y)]) {
                ok = false;
                break;
            }
            hit[static_cast<std::size_t>(y)] = true;
        }
        if (ok) return Permutation(std::move(phi));
    }
    return std::nullopt;
}

bool isomorphic(const Origami& a, const Origami& b) { return find_isomorphism(a, b).has_value(); }

bool veech_h_alpha_check(const Origami& o, long alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be a positive integer");
    return isomorphic(act_lower_power(o, alpha), o);
}

long minimal_alpha(const Origami& o, long max_alpha) {
    Origami cur = o;
    for (long alpha = 1; alpha <= max_alpha; ++alpha) {
        cur = act(Generator::TLower, cur);
        if (isomorphic(cur, o)) return alpha;
    }
    throw std::runtime_error("no h_alpha in the Veech group up to alpha = " + std::to_string(max_alpha));
}

} // namespace mindenom
