#pragma once

#include "schsym/counting.hpp"
#include "schsym/determining.hpp"
#include "schsym/diffop.hpp"
#include "schsym/exppoly.hpp"
#include "schsym/format.hpp"
#include "schsym/json_io.hpp"
#include "schsym/killing.hpp"
#include "schsym/matrix.hpp"
#include "schsym/monomial.hpp"
#include "schsym/parse.hpp"
#include "schsym/poly.hpp"
#include "schsym/rational.hpp"
#include "schsym/schrodinger.hpp"
#include "schsym/spectral.hpp"
#include "schsym/symtensor.hpp"
#include "schsym/upoly.hpp"
