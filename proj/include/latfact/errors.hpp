#ifndef LATFACT_ERRORS_HPP
#define LATFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latfact {

enum class errc {
    not_acyclic,
    no_unique_bottom,
    no_unique_top,
    meet_fails,
    join_fails,
    transitive_cover_edge,
    not_comparable,
    not_graded,
    not_left_modular,
    not_modular,
    not_semimodular,
    not_geometric,
    chain_not_modular,
    not_maximal_chain,
    not_ll,
    rank_preservation_fails,
    hypothesis_failed,
    empty_fiber,
    no_unique_max,
    empty_set,
    invalid_rank,
    bad_input,
    too_large,
};

const char* errc_name(errc c);

// Domain error carrying the offending element indices (when applicable) so
// callers can surface witnesses.
class LatticeError : public std::runtime_error {
public:
    LatticeError(errc code, std::string detail, int x = -1, int y = -1)
        : std::runtime_error(std::string(errc_name(code)) +
                             (detail.empty() ? "" : ": " + detail)),
          code_(code), x_(x), y_(y) {}

    errc code() const { return code_; }
    int witness_x() const { return x_; }
    int witness_y() const { return y_; }

private:
    errc code_;
    int x_, y_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_acyclic: return "NotAcyclic";
        case errc::no_unique_bottom: return "NoUniqueBottom";
        case errc::no_unique_top: return "NoUniqueTop";
        case errc::meet_fails: return "MeetFails";
        case errc::join_fails: return "JoinFails";
        case errc::transitive_cover_edge: return "TransitiveCoverEdge";
        case errc::not_comparable: return "NotComparable";
        case errc::not_graded: return "NotGraded";
        case errc::not_left_modular: return "NotLeftModular";
        case errc::not_modular: return "NotModular";
        case errc::not_semimodular: return "NotSemimodular";
        case errc::not_geometric: return "NotGeometric";
        case errc::chain_not_modular: return "ChainNotModular";
        case errc::not_maximal_chain: return "NotMaximalChain";
        case errc::not_ll: return "NotLL";
        case errc::rank_preservation_fails: return "RankPreservationFails";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::empty_fiber: return "EmptyFiber";
        case errc::no_unique_max: return "NoUniqueMax";
        case errc::empty_set: return "EmptyD";
        case errc::invalid_rank: return "InvalidRank";
        case errc::bad_input: return "BadInput";
        case errc::too_large: return "TooLarge";
    }
    return "UnknownError";
}

} // namespace latfact

#endif
