#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.

PROJECT_NAME = "OctoVector"
AUTHOR = "Drakkar-Software"
VERSION = "0.4.2"  # major.minor.revision
LONG_VERSION = f"{VERSION}"
