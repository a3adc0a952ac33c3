#ifndef GRIDTOLL_ERROR_HPP
#define GRIDTOLL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gridtoll {

// Error taxonomy mapped to CLI exit codes: usage/io -> 2, guard/budget -> 3.
class Error : public std::runtime_error {
public:
    enum class Kind { usage, io, guard, budget };

    Error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace gridtoll

#endif
