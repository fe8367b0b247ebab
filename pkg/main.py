"""
反区分性与认知重叠工具箱主程序入口
"""

import sys
from pathlib import Path

# 添加项目根目录到Python路径
sys.path.append(str(Path(__file__).parent))

from cli.main import run


if __name__ == "__main__":
    sys.exit(run())
