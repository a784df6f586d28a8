#ifndef ETAQ_ERRORS_HPP
#define ETAQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etaq {

struct zero_series_error : std::domain_error {
    explicit zero_series_error(const std::string& what) : std::domain_error(what) {}
};

struct insufficient_precision_error : std::domain_error {
    explicit insufficient_precision_error(const std::string& what) : std::domain_error(what) {}
};

struct incompatible_offsets_error : std::domain_error {
    explicit incompatible_offsets_error(const std::string& what) : std::domain_error(what) {}
};

struct not_a_divisor_error : std::domain_error {
    explicit not_a_divisor_error(const std::string& what) : std::domain_error(what) {}
};

struct half_integral_weight_error : std::domain_error {
    explicit half_integral_weight_error(const std::string& what) : std::domain_error(what) {}
};

struct not_prime_error : std::domain_error {
    explicit not_prime_error(const std::string& what) : std::domain_error(what) {}
};

struct out_of_domain_error : std::domain_error {
    explicit out_of_domain_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace etaq

#endif
