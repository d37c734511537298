#pragma once

#include "kms/roots/bases.hpp"
#include "kms/roots/classify.hpp"
#include "kms/roots/pis.hpp"
#include "kms/roots/positive.hpp"
#include "kms/roots/principal.hpp"
#include "kms/roots/real.hpp"
#include "kms/roots/weyl.hpp"
