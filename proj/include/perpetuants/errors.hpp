/*
   Copyright 2026 The perpetuants authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PERPETUANTS_ERRORS_HPP
#define PERPETUANTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace perpetuants
{

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different variable families (a-variables vs. lambda-variables).
class FamilyMismatchError : public Error
{
public:
    using Error::Error;
};

/// An argument is outside the domain of the operation (n too small, odd weight, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

/// A polynomial that was required to be homogeneous and isobaric is not.
/// Carries the two terms that disagree, in canonical text form.
class InhomogeneousError : public Error
{
public:
    InhomogeneousError(const std::string &what, std::string first, std::string second)
        : Error(what), first_term(std::move(first)), second_term(std::move(second))
    {
    }

    std::string first_term;
    std::string second_term;
};

/// Malformed text or JSON input.
class ParseError : public Error
{
public:
    using Error::Error;
};

/// An internal consistency check failed. Never triggered by valid input.
class InternalError : public Error
{
public:
    using Error::Error;
};

} // namespace perpetuants

#endif
