#pragma once

#include <stdexcept>

namespace ehrhart {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// geometry
class DimensionMismatch : public Error { public: using Error::Error; };
class NotFullDimensional : public Error { public: using Error::Error; };
class OriginNotInterior : public Error { public: using Error::Error; };

// counting
class NotReflexive : public Error { public: using Error::Error; };

// formulas
class MissingB2 : public Error { public: using Error::Error; };
class UnsupportedDimension : public Error { public: using Error::Error; };
class DegenerateDenominator : public Error { public: using Error::Error; };
class SignConditionViolated : public Error { public: using Error::Error; };

// rootcert
class NotSymmetric : public Error { public: using Error::Error; };
class NoConvergence : public Error { public: using Error::Error; };

// input files and coefficient lists
class ParseError : public Error { public: using Error::Error; };

}  // namespace ehrhart
