#pragma once

#include "horokit/bigint.hpp"
#include "horokit/classifier.hpp"
#include "horokit/diophantine.hpp"
#include "horokit/families.hpp"
#include "horokit/hurwitz.hpp"
#include "horokit/io.hpp"
#include "horokit/torus.hpp"
#include "horokit/verify.hpp"
