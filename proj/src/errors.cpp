#include "cogdist/errors.hpp"

namespace cogdist {

const char* errc_name(errc code) {
    switch (code) {
        case errc::unknown_category: return "UnknownCategory";
        case errc::all_counts_dropped: return "AllCountsDropped";
        case errc::empty_profile: return "EmptyProfile";
        case errc::empty_list: return "EmptyList";
        case errc::catalog_mismatch: return "CatalogMismatch";
        case errc::zero_total: return "ZeroTotal";
        case errc::invalid_catalog: return "InvalidCatalog";
        case errc::invalid_vector: return "InvalidVector";
        case errc::invalid_matrix: return "InvalidMatrix";
        case errc::invalid_map: return "InvalidMap";
        case errc::malformed_header: return "MalformedHeader";
        case errc::vertex_count_mismatch: return "VertexCountMismatch";
        case errc::dangling_link_endpoint: return "DanglingLinkEndpoint";
        case errc::unparsable_line: return "UnparsableLine";
        case errc::duplicate_label: return "DuplicateLabel";
        case errc::conflicting_link_weights: return "ConflictingLinkWeights";
        case errc::weight_out_of_range: return "WeightOutOfRange";
        case errc::bad_header: return "BadHeader";
        case errc::negative_count: return "NegativeCount";
        case errc::inconsistent_kind: return "InconsistentKind";
        case errc::unparsable_row: return "UnparsableRow";
        case errc::duplicate_pair: return "DuplicatePair";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::non_positive_weight: return "NonPositiveWeight";
        case errc::empty_input: return "EmptyInput";
        case errc::degenerate_norm: return "DegenerateNorm";
        case errc::non_finite: return "NonFinite";
        case errc::missing_pair: return "MissingPair";
        case errc::unknown_group: return "UnknownGroup";
        case errc::unknown_assessor: return "UnknownAssessor";
        case errc::zero_variance: return "ZeroVariance";
        case errc::pair_set_mismatch: return "PairSetMismatch";
        case errc::too_few_pairs: return "TooFewPairs";
        case errc::io_error: return "IoError";
        case errc::bad_config: return "BadConfig";
    }
    return "UnknownError";
}

bool is_input_error(errc code) {
    switch (code) {
        case errc::unknown_category:
        case errc::all_counts_dropped:
        case errc::empty_profile:
        case errc::invalid_catalog:
        case errc::malformed_header:
        case errc::vertex_count_mismatch:
        case errc::dangling_link_endpoint:
        case errc::unparsable_line:
        case errc::duplicate_label:
        case errc::conflicting_link_weights:
        case errc::weight_out_of_range:
        case errc::bad_header:
        case errc::negative_count:
        case errc::inconsistent_kind:
        case errc::unparsable_row:
        case errc::duplicate_pair:
        case errc::io_error:
        case errc::bad_config:
            return true;
        default:
            return false;
    }
}

}  // namespace cogdist
