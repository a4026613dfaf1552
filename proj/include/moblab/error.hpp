#pragma once

#include <stdexcept>
#include <string>

namespace moblab {

/// Failure categories, mapped 1:1 onto CLI exit codes.
enum class Errc {
    invalid_map,        // singular coefficient matrix, bad normalization
    unsupported_class,  // operation requires a map class the input is not
    invalid_parameter,  // out-of-range numeric parameter
    invalid_input,      // membership/precondition violation on data
    pole,               // evaluation at (or through) the pole
    search_exhausted,   // scan hit its iteration budget without a hit
    construction_failed,// pseudo-orbit builder could not complete
    wrong_construction, // builder invoked for the wrong rotation type
    config,             // malformed config/JSON
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Carries the closest approach seen before the budget ran out.
class SearchExhaustedError : public Error {
public:
    SearchExhaustedError(const std::string& what, long long best_index, double best_distance)
        : Error(Errc::search_exhausted, what), best_index_(best_index), best_distance_(best_distance) {}
    long long best_index() const noexcept { return best_index_; }
    double best_distance() const noexcept { return best_distance_; }

private:
    long long best_index_;
    double best_distance_;
};

}  // namespace moblab
