#include "mindeg/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mindeg {

Permutation::Permutation(std::vector<Pt> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Pt v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("permutation image table is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Pt> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Pt>(i);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        r.images_[images_[i]] = static_cast<Pt>(i);
    return r;
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("degree mismatch in composition");
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        r.images_[i] = other.images_[images_[i]];
    return r;
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<Pt> im(degree);
    for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Pt>(i);
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k] - 1;
            int b = cyc[(k + 1) % cyc.size()] - 1;
            if (a < 0 || b < 0 || a >= static_cast<int>(degree) || b >= static_cast<int>(degree))
                throw std::invalid_argument("cycle entry out of range");
            im[a] = static_cast<Pt>(b);
        }
    }
    return Permutation(std::move(im));
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << (j + 1);
            first = false;
            j = images_[j];
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Permutation Permutation::parse(const std::string& text, std::size_t degree) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos < text.size() && text[pos] == '[') {
        ++pos;
        std::vector<Pt> im;
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw std::invalid_argument("unterminated image table");
            if (text[pos] == ']') { ++pos; break; }
            std::size_t end;
            int v = std::stoi(text.substr(pos), &end);
            pos += end;
            if (v < 1 || v > static_cast<int>(degree))
                throw std::invalid_argument("image out of range");
            im.push_back(static_cast<Pt>(v - 1));
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        if (im.size() != degree) throw std::invalid_argument("image table length != degree");
        return Permutation(std::move(im));
    }
    std::vector<std::vector<int>> cycles;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
            if (text[pos] == ')') { ++pos; break; }
            if (text[pos] == ',') { ++pos; continue; }
            std::size_t end;
            int v = std::stoi(text.substr(pos), &end);
            pos += end;
            cyc.push_back(v);
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    return from_cycles(degree, cycles);
}

std::size_t PermHash::operator()(const Permutation& p) const {
    std::size_t h = p.degree() * 0x9e3779b97f4a7c15ULL;
    for (Pt v : p.images()) h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

} // namespace mindeg
