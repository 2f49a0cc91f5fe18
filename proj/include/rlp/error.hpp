// Exception hierarchy shared by all rlp headers.
#pragma once

#include <stdexcept>
#include <string>

namespace rlp {

// Base class; every library error derives from it so callers can catch
// rlp::Error to distinguish domain failures from std errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RLP_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

RLP_DEFINE_ERROR(RankError);                  // rank-deficient matrix where full rank is required
RLP_DEFINE_ERROR(NotSublatticeError);         // claimed sublattice is not contained in the superlattice
RLP_DEFINE_ERROR(ZeroVectorError);            // zero vector where a direction is required
RLP_DEFINE_ERROR(NotStableError);             // group element does not stabilize the given lattice
RLP_DEFINE_ERROR(DegenerateError);            // point set does not affinely span the ambient space
RLP_DEFINE_ERROR(NotLatticePointError);       // point is not a member of the declared lattice
RLP_DEFINE_ERROR(FrameError);                 // flag frame unexpectedly degenerate
RLP_DEFINE_ERROR(NotRootSystemError);         // edge directions fail the root-system axioms
RLP_DEFINE_ERROR(NotRootError);               // vector is not a member of the root set
RLP_DEFINE_ERROR(UnsupportedTypeError);       // Dynkin diagram outside the simply-laced families
RLP_DEFINE_ERROR(NotCenteredError);           // operation requires the origin in the interior
RLP_DEFINE_ERROR(InconsistentScaleError);     // facet barycenters need different primitivizing scales
RLP_DEFINE_ERROR(BadEntryError);              // invalid catalog entry parameters
RLP_DEFINE_ERROR(UnsupportedDimensionError);  // dimension outside the supported range
RLP_DEFINE_ERROR(BudgetExceededError);        // resource guard tripped
RLP_DEFINE_ERROR(FormatError);                // malformed serialized input

#undef RLP_DEFINE_ERROR

}  // namespace rlp
