#pragma once

#include <stdexcept>
#include <string>

namespace swapdeck {

// Base of every error the library throws on a violated precondition or
// malformed input. Internal invariant failures use std::logic_error instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MissingEdge : Error {
    using Error::Error;
};
struct DuplicateEdge : Error {
    using Error::Error;
};
struct OrderTooLarge : Error {
    using Error::Error;
};
struct EmptyGraph : Error {
    using Error::Error;
};
struct SizeOutOfRange : Error {
    using Error::Error;
};
struct InvalidSubDeck : Error {
    using Error::Error;
};
struct EdgeNotPresent : Error {
    using Error::Error;
};
struct MalformedLine : Error {
    using Error::Error;
};
struct ParameterOutOfRange : Error {
    using Error::Error;
};
struct NotBipartiteWithGivenParts : Error {
    using Error::Error;
};
struct NotAFamilyInstance : Error {
    using Error::Error;
};
struct SizeOutOfTheoremRange : Error {
    using Error::Error;
};

} // namespace swapdeck
