#include "endgraph/descriptor.hpp"

#include "endgraph/errors.hpp"

namespace endgraph {

std::string Rank::to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value());
}

bool has_loop_ends(const EndPairDescriptor& endpair) {
    if (const auto* f = std::get_if<FinitePair>(&endpair)) return f->loop_ends > 0;
    if (const auto* s = std::get_if<ConvergentSequence>(&endpair)) return s->limit_in_loops;
    return std::get<CantorPair>(endpair).loop_part != CantorLoopPart::Empty;
}

std::string validation_error(const StandardGraphDescriptor& d) {
    if (const auto* f = std::get_if<FinitePair>(&d.endpair)) {
        if (f->ends == 0) return "ends must be at least 1";
        if (f->loop_ends > f->ends) return "loopends exceeds ends";
    }
    const bool loops = has_loop_ends(d.endpair);
    if (d.rank.is_infinite() && !loops)
        return "infinite rank requires a nonempty set of ends accumulated by loops";
    if (!d.rank.is_infinite() && loops)
        return "finite rank forbids ends accumulated by loops";
    return {};
}

void validate(const StandardGraphDescriptor& d) {
    if (auto err = validation_error(d); !err.empty())
        throw DomainError("invalid descriptor (" + to_string(d) + "): " + err);
}

std::string to_string(const EndPairDescriptor& e) {
    if (const auto* f = std::get_if<FinitePair>(&e))
        return "ends=" + std::to_string(f->ends) + " loopends=" + std::to_string(f->loop_ends);
    if (const auto* s = std::get_if<ConvergentSequence>(&e))
        return std::string("endpair=omega+1:") + (s->limit_in_loops ? "1" : "0");
    switch (std::get<CantorPair>(e).loop_part) {
        case CantorLoopPart::Empty: return "endpair=cantor:empty";
        case CantorLoopPart::All: return "endpair=cantor:all";
        case CantorLoopPart::ProperClopen: return "endpair=cantor:clopen";
    }
    return {};
}

std::string to_string(const StandardGraphDescriptor& d) {
    return "descriptor rank=" + d.rank.to_string() + " " + to_string(d.endpair);
}

}  // namespace endgraph
