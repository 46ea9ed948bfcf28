#include "linarr/poset.hpp"

#include <sstream>

namespace linarr {

std::string PosetElement::id() const {
    switch (kind) {
        case Kind::MPoint: return "p" + std::to_string(index);
        case Kind::LineEl: return "l" + std::to_string(index);
        case Kind::Top: return "T";
    }
    return "?";
}

IntersectionPoset build_poset(const Arrangement& a) {
    return build_poset(a, multiple_points(a));
}

IntersectionPoset build_poset(const Arrangement& a, const std::vector<MultiplePoint>& points) {
    IntersectionPoset p;
    const std::size_t np = points.size();
    const std::size_t nl = a.size();
    for (std::size_t i = 0; i < np; ++i) p.elements.push_back({PosetElement::Kind::MPoint, i});
    for (std::size_t j = 0; j < nl; ++j) p.elements.push_back({PosetElement::Kind::LineEl, j});
    p.elements.push_back({PosetElement::Kind::Top, 0});
    const std::size_t top = p.top();

    // Inclusion is decided geometrically, not read off the incident lists.
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < nl; ++j) {
            if (point_on_line(points[i].location, a.line(j))) p.relations.insert({i, np + j});
        }
    }
    for (std::size_t x = 0; x < top; ++x) p.relations.insert({x, top});
    return p;
}

MultiplicityVector recover_t(const IntersectionPoset& p) {
    const std::size_t top = p.top();
    std::vector<bool> minimal(top, true);
    std::vector<std::size_t> up(top, 0);
    for (const auto& [x, y] : p.relations) {
        if (y == top) continue;
        minimal[y] = false;
        ++up[x];
    }
    MultiplicityVector t;
    for (std::size_t x = 0; x < top; ++x) {
        if (minimal[x] && up[x] >= 2) ++t[up[x]];
    }
    return t;
}

std::size_t recover_d(const IntersectionPoset& p) {
    const std::size_t top = p.top();
    std::vector<bool> maximal(top, true);
    for (const auto& [x, y] : p.relations) {
        if (y != top) maximal[x] = false;
    }
    std::size_t d = 0;
    for (bool m : maximal) d += m ? 1 : 0;
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const IntersectionPoset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t count = p.elements.size();
    for (const auto& [x, y] : p.relations) {
        bool covered = true;
        for (std::size_t z = 0; z < count && covered; ++z) {
            if (p.less(x, z) && p.less(z, y)) covered = false;
        }
        if (covered) out.emplace_back(x, y);
    }
    return out;  // std::set iteration already yields (x, y) order
}

bool is_strict_partial_order(const IntersectionPoset& p) {
    for (const auto& [x, y] : p.relations) {
        if (x == y || p.less(y, x)) return false;
        for (std::size_t z = 0; z < p.elements.size(); ++z) {
            if (p.less(y, z) && !p.less(x, z)) return false;
        }
    }
    return true;
}

std::string hasse_dot(const IntersectionPoset& p) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (const auto& e : p.elements) os << "  " << e.id() << ";\n";
    for (const auto& [x, y] : hasse_edges(p)) {
        os << "  " << p.elements[x].id() << " -> " << p.elements[y].id() << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace linarr
