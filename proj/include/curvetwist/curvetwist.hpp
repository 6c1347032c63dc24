#pragma once

#include "curvetwist/bezout.hpp"
#include "curvetwist/braid.hpp"
#include "curvetwist/contact.hpp"
#include "curvetwist/conventions.hpp"
#include "curvetwist/error.hpp"
#include "curvetwist/factorization.hpp"
#include "curvetwist/fixtures.hpp"
#include "curvetwist/io.hpp"
#include "curvetwist/matrix.hpp"
#include "curvetwist/monodromy.hpp"
#include "curvetwist/polynomial.hpp"
#include "curvetwist/resultant.hpp"
#include "curvetwist/two_lines.hpp"
#include "curvetwist/univariate.hpp"
#include "curvetwist/verify.hpp"
