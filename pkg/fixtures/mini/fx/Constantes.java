package fx;

public interface Constantes {

    int LIMITE_PADRAO = 30;
}
