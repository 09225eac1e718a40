#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "endgraph/ball.hpp"
#include "endgraph/errors.hpp"

namespace endgraph {

double DyadicDistance::value() const {
    if (kind == Kind::Zero) return 0.0;
    return std::pow(2.0, -static_cast<double>(half_exponent) / 2.0);
}

std::string DyadicDistance::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Zero:
            return "zero 0";
        case Kind::Exact:
            out << "exact ";
            break;
        case Kind::UpperBound:
            out << "upper ";
            break;
    }
    out << "2^-" << half_exponent << "/2 " << std::setprecision(16) << value();
    return out.str();
}

DyadicDistance distance(const GraphOracle& g1, const GraphOracle& g2, std::int64_t max_half_steps) {
    if (max_half_steps < 0) throw DomainError("distance budget must be non-negative");
    // Every edge-end leaving a nonzero-radius ball shows up as a stub, so a
    // stub-free ball is the whole graph.
    const HalfRadius top{std::max<std::int64_t>(max_half_steps, 1)};
    const Ball b1 = ball(g1, top);
    const Ball b2 = ball(g2, top);

    for (std::int64_t h = 1; h <= max_half_steps; ++h) {
        const HalfRadius r{h};
        if (canonical_code(truncate(b1, r)) != canonical_code(truncate(b2, r)))
            return {DyadicDistance::Kind::Exact, h - 1};
    }
    if (b1.stub_count() == 0 && b2.stub_count() == 0 && canonical_code(b1) == canonical_code(b2))
        return {DyadicDistance::Kind::Zero, 0};
    return {DyadicDistance::Kind::UpperBound, max_half_steps};
}

bool in_basic_open(const GraphOracle& gamma, HalfRadius r, const GraphOracle& delta) {
    return canonical_code(ball(gamma, r)) == canonical_code(ball(delta, r));
}

}  // namespace endgraph
