import logging
import sys

from interface import comandos

# --- Configuração do log (saída de erro; a saída padrão fica só com os dados) ---
logging.basicConfig(level=logging.WARNING, stream=sys.stderr,
                    format="%(levelname)s %(name)s: %(message)s")

if __name__ == "__main__":
    sys.exit(comandos.main())
