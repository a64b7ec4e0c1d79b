#ifndef HX_ERRORS_HPP
#define HX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hx {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct algebra_error : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

struct branch_error : error {
    using error::error;
};

struct not_on_manifold_error : error {
    using error::error;
};

struct config_error : error {
    using error::error;
};

struct parse_error : error {
    int column;
    parse_error(const std::string& msg, int col)
        : error(msg + " (column " + std::to_string(col) + ")"), column(col) {}
};

} // namespace hx

#endif
