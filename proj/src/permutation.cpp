#include "mapforge/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mapforge/errors.hpp"

namespace mapforge {

Permutation::Permutation(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    img_.resize(static_cast<std::size_t>(degree));
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<Dart> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Dart v : images) {
        if (v < 1 || v > n) throw std::invalid_argument("image out of range");
        if (seen[static_cast<std::size_t>(v - 1)]) throw std::invalid_argument("image repeated");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<Dart>>& cycles) {
    Permutation p(degree);
    std::vector<char> used(static_cast<std::size_t>(degree), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Dart d = cyc[i];
            if (d < 1 || d > degree) throw std::invalid_argument("cycle element out of range");
            if (used[static_cast<std::size_t>(d - 1)])
                throw std::invalid_argument("dart appears in two cycles");
            used[static_cast<std::size_t>(d - 1)] = 1;
            p.img_[static_cast<std::size_t>(d - 1)] = cyc[(i + 1) % cyc.size()];
        }
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation inv(degree());
    for (Dart d = 1; d <= degree(); ++d) inv.img_[static_cast<std::size_t>((*this)(d) - 1)] = d;
    return inv;
}

bool Permutation::is_identity() const {
    for (Dart d = 1; d <= degree(); ++d)
        if ((*this)(d) != d) return false;
    return true;
}

bool Permutation::is_fixed_point_free_involution() const {
    for (Dart d = 1; d <= degree(); ++d) {
        Dart e = (*this)(d);
        if (e == d || (*this)(e) != d) return false;
    }
    return degree() % 2 == 0;
}

std::vector<std::vector<Dart>> Permutation::cycles() const {
    std::vector<std::vector<Dart>> out;
    std::vector<char> seen(static_cast<std::size_t>(degree()), 0);
    for (Dart d = 1; d <= degree(); ++d) {
        if (seen[static_cast<std::size_t>(d - 1)]) continue;
        std::vector<Dart> cyc;
        Dart x = d;
        while (!seen[static_cast<std::size_t>(x - 1)]) {
            seen[static_cast<std::size_t>(x - 1)] = 1;
            cyc.push_back(x);
            x = (*this)(x);
        }
        out.push_back(std::move(cyc));
    }
    // scanning darts in increasing order already yields min-first cycles
    // sorted by their minima
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(static_cast<std::size_t>(degree()), 0);
    for (Dart d = 1; d <= degree(); ++d) {
        if (seen[static_cast<std::size_t>(d - 1)]) continue;
        ++count;
        for (Dart x = d; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x))
            seen[static_cast<std::size_t>(x - 1)] = 1;
    }
    return count;
}

std::vector<Dart> Permutation::orbit(Dart d) const {
    std::vector<Dart> cyc{d};
    for (Dart x = (*this)(d); x != d; x = (*this)(x)) cyc.push_back(x);
    return cyc;
}

int Permutation::orbit_size(Dart d) const {
    int size = 1;
    for (Dart x = (*this)(d); x != d; x = (*this)(x)) ++size;
    return size;
}

std::string Permutation::to_cycle_string() const {
    if (degree() == 0) return "()";
    std::string out;
    for (const auto& cyc : cycles()) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(cyc[i]);
        }
        out += ')';
    }
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw DegreeMismatchError(p.degree(), q.degree());
    std::vector<Dart> img(static_cast<std::size_t>(p.degree()));
    for (Dart d = 1; d <= p.degree(); ++d) img[static_cast<std::size_t>(d - 1)] = p(q(d));
    return Permutation::from_images(std::move(img));
}

Permutation conjugated(const Permutation& p, const Permutation& g) {
    if (p.degree() != g.degree()) throw DegreeMismatchError(p.degree(), g.degree());
    std::vector<Dart> img(static_cast<std::size_t>(p.degree()));
    for (Dart d = 1; d <= p.degree(); ++d)
        img[static_cast<std::size_t>(g(d) - 1)] = g(p(d));
    return Permutation::from_images(std::move(img));
}

}  // namespace mapforge
