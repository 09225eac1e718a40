#include <algorithm>
#include <numeric>

#include "endgraph/errors.hpp"
#include "endgraph/phe.hpp"

namespace endgraph {

namespace {

constexpr std::uint32_t kMaxEnds = 12;

BooleanAlgebra powerset(std::uint32_t atoms, const std::string& tag) {
    const std::size_t size = std::size_t{1} << atoms;
    BooleanAlgebra a;
    a.elements.resize(size);
    a.join.assign(size, std::vector<std::size_t>(size));
    a.meet.assign(size, std::vector<std::size_t>(size));
    a.complement.resize(size);
    for (std::size_t x = 0; x < size; ++x) {
        a.elements[x] = tag + ":" + std::to_string(x);
        a.complement[x] = (size - 1) & ~x;
        for (std::size_t y = 0; y < size; ++y) {
            a.join[x][y] = x | y;
            a.meet[x][y] = x & y;
        }
    }
    a.zero = 0;
    a.one = size - 1;
    return a;
}

std::string algebra_error(const BooleanAlgebra& a, const std::string& name) {
    const std::size_t n = a.size();
    if (n == 0) return name + " is empty";
    if (a.join.size() != n || a.meet.size() != n || a.complement.size() != n) return name + " tables have wrong size";
    for (std::size_t x = 0; x < n; ++x) {
        if (a.join[x].size() != n || a.meet[x].size() != n) return name + " tables have wrong size";
        for (std::size_t y = 0; y < n; ++y)
            if (a.join[x][y] >= n || a.meet[x][y] >= n) return name + " table entry out of range";
        if (a.complement[x] >= n) return name + " complement out of range";
    }
    if (a.zero >= n || a.one >= n) return name + " constants out of range";
    for (std::size_t x = 0; x < n; ++x) {
        if (a.join[x][a.zero] != x || a.meet[x][a.one] != x) return name + " violates the identity laws";
        if (a.join[x][a.complement[x]] != a.one || a.meet[x][a.complement[x]] != a.zero)
            return name + " violates the complement laws";
        for (std::size_t y = 0; y < n; ++y) {
            if (a.join[x][y] != a.join[y][x] || a.meet[x][y] != a.meet[y][x]) return name + " is not commutative";
            if (a.join[x][a.meet[x][y]] != x || a.meet[x][a.join[x][y]] != x) return name + " violates absorption";
            for (std::size_t z = 0; z < n; ++z) {
                if (a.join[x][a.join[y][z]] != a.join[a.join[x][y]][z]) return name + " join is not associative";
                if (a.meet[x][a.meet[y][z]] != a.meet[a.meet[x][y]][z]) return name + " meet is not associative";
                if (a.meet[x][a.join[y][z]] != a.join[a.meet[x][y]][a.meet[x][z]]) return name + " is not distributive";
            }
        }
    }
    return {};
}

std::vector<std::size_t> atoms_of(const BooleanAlgebra& a) {
    std::vector<std::size_t> atoms;
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (x == a.zero) continue;
        bool minimal = true;
        for (std::size_t y = 0; y < a.size() && minimal; ++y)
            if (y != a.zero && y != x && a.meet[x][y] == y) minimal = false;
        if (minimal) atoms.push_back(x);
    }
    return atoms;
}

// Extends a bijection of atoms to the whole algebra through joins; empty when
// the result is not an isomorphism.
std::vector<std::size_t> extend(const BooleanAlgebra& a, const BooleanAlgebra& b, const std::vector<std::size_t>& atoms_a,
                                const std::vector<std::size_t>& image) {
    const std::size_t n = a.size();
    std::vector<std::size_t> phi(n);
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t y = b.zero;
        for (std::size_t i = 0; i < atoms_a.size(); ++i)
            if (a.meet[x][atoms_a[i]] == atoms_a[i]) y = b.join[y][image[i]];
        if (hit[y]) return {};
        hit[y] = true;
        phi[x] = y;
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (phi[a.complement[x]] != b.complement[phi[x]]) return {};
        for (std::size_t y = 0; y < n; ++y)
            if (phi[a.join[x][y]] != b.join[phi[x]][phi[y]] || phi[a.meet[x][y]] != b.meet[phi[x]][phi[y]]) return {};
    }
    return phi;
}

bool l_map_exists(const CountableStructure& s1, const CountableStructure& s2, const std::vector<std::size_t>& phi) {
    const std::size_t m = s1.L.size();
    std::vector<std::size_t> psi(m, m);
    for (std::size_t x = 0; x < s1.K.size(); ++x) {
        const std::size_t from = s1.f[x];
        const std::size_t to = s2.f[phi[x]];
        if (psi[from] == m)
            psi[from] = to;
        else if (psi[from] != to)
            return false;
    }
    std::vector<bool> hit(m, false);
    for (auto y : psi) {
        if (y >= m || hit[y]) return false;
        hit[y] = true;
    }
    for (std::size_t x = 0; x < m; ++x) {
        if (psi[s1.L.complement[x]] != s2.L.complement[psi[x]]) return false;
        for (std::size_t y = 0; y < m; ++y)
            if (psi[s1.L.join[x][y]] != s2.L.join[psi[x]][psi[y]] || psi[s1.L.meet[x][y]] != s2.L.meet[psi[x]][psi[y]])
                return false;
    }
    return true;
}

}  // namespace

CountableStructure stone_structure(const StandardGraphDescriptor& d) {
    validate(d);
    const auto* pair = std::get_if<FinitePair>(&d.endpair);
    if (!pair) throw DomainError("Stone coding is implemented for finitely many ends only");
    if (pair->ends > kMaxEnds) throw DomainError("Stone coding supports at most 12 ends");
    CountableStructure s;
    s.n = d.rank.is_infinite() ? 0 : d.rank.value() + 1;
    s.K = powerset(pair->ends, "K");
    s.L = powerset(pair->loop_ends, "L");
    const std::size_t mask = (std::size_t{1} << pair->loop_ends) - 1;
    s.f.resize(s.K.size());
    for (std::size_t y = 0; y < s.K.size(); ++y) s.f[y] = y & mask;
    return s;
}

std::string validation_error(const CountableStructure& s) {
    if (auto e = algebra_error(s.K, "K"); !e.empty()) return e;
    if (auto e = algebra_error(s.L, "L"); !e.empty()) return e;
    for (const auto& x : s.K.elements)
        if (std::find(s.L.elements.begin(), s.L.elements.end(), x) != s.L.elements.end())
            return "carriers of K and L share element " + x;
    if (s.f.size() != s.K.size()) return "f is not defined on all of K";
    std::vector<bool> hit(s.L.size(), false);
    for (auto y : s.f) {
        if (y >= s.L.size()) return "f leaves L";
        hit[y] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return "f is not surjective";
    for (std::size_t x = 0; x < s.K.size(); ++x) {
        if (s.f[s.K.complement[x]] != s.L.complement[s.f[x]]) return "f does not preserve complements";
        for (std::size_t y = 0; y < s.K.size(); ++y)
            if (s.f[s.K.join[x][y]] != s.L.join[s.f[x]][s.f[y]] || s.f[s.K.meet[x][y]] != s.L.meet[s.f[x]][s.f[y]])
                return "f does not preserve joins and meets";
    }
    return {};
}

bool structures_isomorphic(const CountableStructure& a, const CountableStructure& b) {
    if (a.n != b.n || a.K.size() != b.K.size() || a.L.size() != b.L.size()) return false;
    const auto atoms_a = atoms_of(a.K);
    const auto atoms_b = atoms_of(b.K);
    if (atoms_a.size() != atoms_b.size()) return false;
    std::vector<std::size_t> perm(atoms_b.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        std::vector<std::size_t> image(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) image[i] = atoms_b[perm[i]];
        const auto phi = extend(a.K, b.K, atoms_a, image);
        if (!phi.empty() && l_map_exists(a, b, phi)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace endgraph
