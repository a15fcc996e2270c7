#pragma once

#include <stdexcept>
#include <string>

namespace lumilink {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed, out-of-range or unknown configuration input.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A model function was evaluated outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The minimum RF rate cannot be met for the requested block, not even at the
/// maximum DC bias.
class InfeasibleThreshold : public Error {
public:
    using Error::Error;
};

}  // namespace lumilink
