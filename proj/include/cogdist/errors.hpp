#pragma once

#include <stdexcept>
#include <string>

namespace cogdist {

// Failure modes of the public operations. The CLI maps input/parse codes to
// exit 2 and computation codes to exit 4.
enum class errc {
    // model
    unknown_category,
    all_counts_dropped,
    empty_profile,
    empty_list,
    catalog_mismatch,
    zero_total,
    invalid_catalog,
    invalid_vector,
    invalid_matrix,
    invalid_map,
    // ingest
    malformed_header,
    vertex_count_mismatch,
    dangling_link_endpoint,
    unparsable_line,
    duplicate_label,
    conflicting_link_weights,
    weight_out_of_range,
    bad_header,
    negative_count,
    inconsistent_kind,
    unparsable_row,
    duplicate_pair,
    // barycenter
    length_mismatch,
    non_positive_weight,
    empty_input,
    // wcs
    degenerate_norm,
    non_finite,
    // analysis
    missing_pair,
    unknown_group,
    unknown_assessor,
    zero_variance,
    pair_set_mismatch,
    too_few_pairs,
    // cli / io
    io_error,
    bad_config,
};

const char* errc_name(errc code);

// True for errors caused by malformed input files or configuration rather
// than by a failing computation.
bool is_input_error(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace cogdist
