#pragma once

#include <stdexcept>
#include <string>

namespace jacklab {

// Base for everything the testbed throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// wirecodec
class MalformedMessage : public Error {
    using Error::Error;
};
class BadVersion : public Error {
    using Error::Error;
};
class TooShort : public Error {
    using Error::Error;
};
class CorruptCapture : public Error {
    using Error::Error;
};
class NonMonotonic : public Error {
    using Error::Error;
};

// simdevices / services
class PortInUse : public Error {
    using Error::Error;
};
class UnknownNumber : public Error {
    using Error::Error;
};

// attacklab
class InventoryUnreachable : public Error {
    using Error::Error;
};
class NotAnInvite : public Error {
    using Error::Error;
};
class UnknownPayloadType : public Error {
    using Error::Error;
};

// defenseproxy
class AuthenticationFailure : public Error {
    using Error::Error;
};
class PayloadTooLarge : public Error {
    using Error::Error;
};
class PersistenceFailure : public Error {
    using Error::Error;
};

// exposure
class SchemaError : public Error {
    using Error::Error;
};
class DuplicateKey : public Error {
    using Error::Error;
};
class MissingBaseline : public Error {
    using Error::Error;
};
class ZeroBaseline : public Error {
    using Error::Error;
};
class EmptyDataset : public Error {
    using Error::Error;
};

// scenario runner
class TopologyError : public Error {
    using Error::Error;
};

} // namespace jacklab
