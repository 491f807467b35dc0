#pragma once

#include <stdexcept>
#include <string>

namespace hombox {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AxisMismatch : public Error { public: using Error::Error; };
class BadPermutation : public Error { public: using Error::Error; };
class Singular : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class BadScalar : public Error { public: using Error::Error; };

class DimMismatch : public Error { public: using Error::Error; };
class SideMismatch : public Error { public: using Error::Error; };
class MissingStructure : public Error { public: using Error::Error; };
class UnboundVariable : public Error { public: using Error::Error; };
class MalformedIndexWord : public Error { public: using Error::Error; };
class ExpressionError : public Error { public: using Error::Error; };

class NotAutomorphism : public Error { public: using Error::Error; };
class NotInvertible : public Error { public: using Error::Error; };
class ConventionMismatch : public Error { public: using Error::Error; };

class ParseError : public Error { public: using Error::Error; };
class DimensionError : public Error { public: using Error::Error; };
class UnknownBuiltin : public Error { public: using Error::Error; };
class BadParam : public Error { public: using Error::Error; };

}  // namespace hombox
