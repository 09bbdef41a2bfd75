#ifndef BLUNDON_BLUNDON_HPP
#define BLUNDON_BLUNDON_HPP

#include "blundon/centers.hpp"
#include "blundon/engine.hpp"
#include "blundon/error.hpp"
#include "blundon/kernel.hpp"
#include "blundon/numeric_text.hpp"
#include "blundon/oracle.hpp"
#include "blundon/scalar.hpp"
#include "blundon/verify.hpp"

#endif  // BLUNDON_BLUNDON_HPP
