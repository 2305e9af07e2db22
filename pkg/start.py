#  This file is part of OctoVector
#  Copyright (c) 2023 Drakkar-Software, All rights reserved.
#  Distributed under the GNU General Public License version 3.0, see <https://www.gnu.org/licenses/>.
import sys

from octovector.cli import main

if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
